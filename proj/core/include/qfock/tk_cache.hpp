#pragma once

/**
 * @file tk_cache.hpp
 * @brief On-disk cache of T^k bases keyed by (d, q, k).
 *
 * One JSON file per key: {d, q, k, generators, gram, checksum}. The checksum
 * is FNV-1a over the serialized payload; a mismatch or parse failure counts
 * as corruption and the entry is recomputed and rewritten. Writes go to a
 * temporary file in the same directory followed by a rename.
 */

#include <filesystem>
#include <optional>
#include <string>

#include "qfock/check.hpp"
#include "qfock/inner_product.hpp"
#include "qfock/tk_basis.hpp"

namespace qfock {

inline constexpr const char* kCacheDirEnv = "QFOCK_CACHE_DIR";

enum class CacheOrigin { loaded, computed, repaired };

struct CachedBasis {
  TkBasis basis;
  CacheOrigin origin = CacheOrigin::computed;
};

class TkCache {
 public:
  /// Creates the directory if needed; throws CacheError if that fails.
  explicit TkCache(std::filesystem::path dir);

  /// The explicit flag if given, otherwise $QFOCK_CACHE_DIR, otherwise none.
  static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
  [[nodiscard]] std::filesystem::path entry_path(const SpaceConfig& cfg, int k) const;

  /// Loads a valid entry or computes and persists one.
  CachedBasis get(int k, const FockSpace& space) const;

  void store(const TkBasis& basis, const SpaceConfig& cfg) const;
  [[nodiscard]] std::optional<TkBasis> load(int k, const SpaceConfig& cfg) const;

 private:
  std::filesystem::path dir_;
};

std::string cache_checksum(const Json& payload);
Json tk_to_json(const TkBasis& basis, const SpaceConfig& cfg);
/// Throws CacheError on malformed content or checksum mismatch.
TkBasis tk_from_json(const Json& j, const SpaceConfig& cfg, int k);

}  // namespace qfock
