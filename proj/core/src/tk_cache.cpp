#include "qfock/tk_cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "qfock/errors.hpp"

namespace qfock {

namespace fs = std::filesystem;

TkCache::TkCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) throw CacheError("cannot create cache directory " + dir_.string());
}

std::optional<fs::path> TkCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return fs::path(env);
  return std::nullopt;
}

fs::path TkCache::entry_path(const SpaceConfig& cfg, int k) const {
  std::string q = cfg.q.str();
  for (char& c : q) {
    if (c == '/') c = '_';
    if (c == '-') c = 'm';
  }
  return dir_ / ("tk_d" + std::to_string(cfg.dim) + "_q" + q + "_k" + std::to_string(k) + ".json");
}

std::string cache_checksum(const Json& payload) {
  const std::string text = payload.dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

Json tk_to_json(const TkBasis& basis, const SpaceConfig& cfg) {
  Json j;
  j["d"] = cfg.dim;
  j["q"] = cfg.q.str();
  j["k"] = basis.k;
  Json gens = Json::array();
  for (const auto& g : basis.generators) gens.push_back(g.to_json());
  j["generators"] = std::move(gens);
  Json gram = Json::array();
  for (std::size_t i = 0; i < basis.gram.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < basis.gram.cols(); ++c) row.push_back(basis.gram(i, c).str());
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  j["checksum"] = cache_checksum(j);
  return j;
}

TkBasis tk_from_json(const Json& j, const SpaceConfig& cfg, int k) {
  try {
    Json payload = j;
    const std::string stored = payload.at("checksum").get<std::string>();
    payload.erase("checksum");
    if (cache_checksum(payload) != stored) throw CacheError("checksum mismatch");
    if (payload.at("d").get<int>() != cfg.dim || payload.at("q").get<std::string>() != cfg.q.str() ||
        payload.at("k").get<int>() != k) {
      throw CacheError("cache key mismatch");
    }
    TkBasis basis;
    basis.k = k;
    for (const auto& g : payload.at("generators")) basis.generators.push_back(FockVector::from_json(g));
    const auto n = basis.generators.size();
    const auto& gram = payload.at("gram");
    if (gram.size() != n) throw CacheError("gram shape mismatch");
    basis.gram = RationalMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (gram[r].size() != n) throw CacheError("gram shape mismatch");
      for (std::size_t c = 0; c < n; ++c) basis.gram(r, c) = Scalar::parse(gram[r][c].get<std::string>());
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (!basis.generators[r].is_homogeneous(k)) throw CacheError("generator of wrong degree");
      basis.norm_sq.push_back(basis.gram(r, r));
    }
    basis.kernel = basis.generators;
    return basis;
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError(std::string("malformed cache entry: ") + e.what());
  }
}

void TkCache::store(const TkBasis& basis, const SpaceConfig& cfg) const {
  const fs::path target = entry_path(cfg, basis.k);
  const auto tag = std::hash<std::thread::id>{}(std::this_thread::get_id());
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(tag);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache entry " + tmp.string());
    out << tk_to_json(basis, cfg).dump() << '\n';
    if (!out) throw CacheError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CacheError("cannot move cache entry into place: " + target.string());
  }
}

std::optional<TkBasis> TkCache::load(int k, const SpaceConfig& cfg) const {
  const fs::path path = entry_path(cfg, k);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw CacheError(std::string("unparsable cache entry: ") + e.what());
  }
  return tk_from_json(j, cfg, k);
}

CachedBasis TkCache::get(int k, const FockSpace& space) const {
  const SpaceConfig& cfg = space.config();
  bool corrupt = false;
  try {
    if (auto hit = load(k, cfg)) return {std::move(*hit), CacheOrigin::loaded};
  } catch (const CacheError&) {
    corrupt = true;
  }
  CachedBasis out{compute_tk(k, space), corrupt ? CacheOrigin::repaired : CacheOrigin::computed};
  store(out.basis, cfg);
  return out;
}

}  // namespace qfock
