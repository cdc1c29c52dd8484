#pragma once

/**
 * @file catalog.hpp
 * @brief Per-degree catalog of ξ^i_{r,s} = e^{(x)r} (x) ξ^i (x) e^{(x)s}.
 *
 * Degree n holds ξ^0_{n,0} = e^{(x)n} and, for every T^k generator with
 * 1 <= k <= n, the n-k+1 paddings with r + s = n - k. Distinct generators
 * give q-orthogonal families, so coordinates are found family by family:
 * the right-hand side <ξ_{r,s}, x> = <ξ, a_r(e)^s a(e)^r x> needs only
 * annihilators and a degree-k inner product, and each family's small Gram
 * matrix is inverted exactly once at build time.
 */

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qfock/exact_linalg.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/inner_product.hpp"
#include "qfock/tk_basis.hpp"

namespace qfock {

class TkCache;

/// Identifies ξ^{(k, gen)}_{r, s}. The generator part is k = 0, gen = 0, s = 0.
struct CatalogKey {
  int k = 0;
  int gen = 0;
  int r = 0;
  int s = 0;

  [[nodiscard]] int degree() const { return k + r + s; }
  [[nodiscard]] bool generator_part() const { return k == 0; }
  friend auto operator<=>(const CatalogKey&, const CatalogKey&) = default;
  friend bool operator==(const CatalogKey&, const CatalogKey&) = default;
};

struct CatalogEntry {
  CatalogKey key;
  FockVector vector;
  Scalar norm_sq;
};

using CoefficientMap = std::map<CatalogKey, Scalar>;

class RadulescuCatalog {
 public:
  /// Computes (or loads through the cache) every T^k with k <= max_degree.
  static std::shared_ptr<const RadulescuCatalog> build(std::shared_ptr<const FockSpace> space,
                                                       const TkCache* cache = nullptr);

  [[nodiscard]] const FockSpace& space() const { return *space_; }
  [[nodiscard]] std::shared_ptr<const FockSpace> space_ptr() const { return space_; }
  [[nodiscard]] const SpaceConfig& config() const { return space_->config(); }
  [[nodiscard]] int max_degree() const { return space_->max_degree(); }

  [[nodiscard]] const TkBasis& tk(int k) const { return bases_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const std::vector<CatalogEntry>& entries(int degree) const {
    return by_degree_.at(static_cast<std::size_t>(degree));
  }
  [[nodiscard]] const CatalogEntry* find(const CatalogKey& key) const;
  [[nodiscard]] const CatalogEntry& at(const CatalogKey& key) const;

  /// Exact coordinates of x along the catalog. Throws CapacityError above
  /// max_degree.
  [[nodiscard]] CoefficientMap expand(const FockVector& x) const;
  [[nodiscard]] FockVector assemble(const CoefficientMap& coeffs) const;

 private:
  struct Family {
    int k = 0;
    int gen = 0;
    int degree = 0;
    RationalMatrix inverse_gram;  // indexed by r
  };

  RadulescuCatalog(std::shared_ptr<const FockSpace> space, std::vector<TkBasis> bases);

  std::shared_ptr<const FockSpace> space_;
  std::vector<TkBasis> bases_;
  std::vector<std::vector<CatalogEntry>> by_degree_;
  std::map<CatalogKey, std::pair<int, std::size_t>> index_;
  // G_k ξ for every generator, dense in degree-k word order
  std::vector<std::vector<std::vector<Scalar>>> gram_generators_;
  std::map<std::pair<int, std::pair<int, int>>, Family> families_;  // (degree, (k, gen))
};

/// Reference route: solves the full degree-n catalog system by exact
/// elimination. Slow; used to cross-check expand.
CoefficientMap expand_by_elimination(const RadulescuCatalog& catalog, const FockVector& x);

/// Rank of the degree-n catalog, computed modulo a 61-bit prime. A full
/// rank there certifies full rank over the rationals; otherwise the exact
/// rational rank is returned.
std::size_t catalog_rank(const RadulescuCatalog& catalog, int degree);

}  // namespace qfock
