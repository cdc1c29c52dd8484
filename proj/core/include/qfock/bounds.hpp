#pragma once

/**
 * @file bounds.hpp
 * @brief Coefficient cutoffs L_N, R_N and the inequality suites built on them.
 *
 * Left-hand sides are computed exactly and converted to double at the end.
 * Right-hand sides use C(|q|), D(q) to 1e-12 and the empirical Riesz
 * extremes A_q, B_q of the catalog in place of the unspecified constants.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qfock/catalog.hpp"
#include "qfock/check.hpp"
#include "qfock/graded_operator.hpp"
#include "qfock/riesz.hpp"
#include "qfock/xi.hpp"

namespace qfock {

class CoefficientProjection {
 public:
  CoefficientProjection(int cutoff, Side side, std::shared_ptr<const RadulescuCatalog> catalog);

  [[nodiscard]] int cutoff() const { return cutoff_; }
  [[nodiscard]] Side side() const { return side_; }
  [[nodiscard]] const RadulescuCatalog& catalog() const { return *catalog_; }

  /// Drops the generator part and every coefficient with r > N (left) or
  /// s > N (right).
  [[nodiscard]] CoefficientMap mask(const CoefficientMap& coeffs) const;

 private:
  int cutoff_;
  Side side_;
  std::shared_ptr<const RadulescuCatalog> catalog_;
};

FockVector apply_projection(const CoefficientProjection& p, const FockVector& x);

struct BoundCheck {
  std::string lemma;
  Json params = Json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<double> rhs_alt;  ///< secondary form of the constant, if any
  std::optional<double> rhs_inflated;  ///< recomputed with A/2, 2B on violation
  Status status = Status::holds;

  [[nodiscard]] double margin() const { return rhs - lhs; }
  [[nodiscard]] Json to_json() const;
};

/// holds iff lhs <= rhs (1 + 1e-9)
Status bound_status(double lhs, double rhs);

/// Everything a suite needs at one q: the catalog, the constants and the
/// applicability verdict (E(q) > 0 and -1/7 < q < 1/4).
struct BoundContext {
  std::shared_ptr<const RadulescuCatalog> catalog;
  RieszConstants riesz;
  EstimateConstants constants;
  bool applicable = true;
  std::string reason;
};

BoundContext make_bound_context(std::shared_ptr<const RadulescuCatalog> catalog);

/// Deterministic generator for one parameter tuple.
std::mt19937_64 seeded_rng(std::uint64_t seed, const std::string& tag);

/// Random small rational in {±1, ±2, ±3} / {1, 2, 3}, never zero.
Scalar random_coefficient(std::mt19937_64& rng);

/// Random combination of catalog vectors with k >= 1 and degree <= cap.
FockVector random_orthocomplement_vector(const RadulescuCatalog& catalog, int degree_cap, std::mt19937_64& rng,
                                         int terms = 6);

/// Random sparse combination of words of length <= max_degree over all
/// letters.
FockVector random_sparse_vector(int dim, int max_degree, std::mt19937_64& rng, int terms = 4);

/// ‖L_N(a_r(e)^k x)‖² against the modularity estimate for x supported on
/// r >= N+1 of one T^t family.
std::vector<BoundCheck> modularity_bound_suite(const BoundContext& ctx, int N, int k, int t, int degree_cap,
                                               int samples, std::uint64_t seed);

/// ‖L_{N1}(s(e^{(x)n}) L_{N2} x)‖ against G(q) (n+1)^{3/2} |q|^{n-N1-N2} ‖x‖.
std::vector<BoundCheck> decay_bound_suite(const BoundContext& ctx, int N1, int N2, int n, int degree_cap,
                                          int samples, std::uint64_t seed);

/// a(e_j) x_{N,N} = q^N (a(e_j) x)_{N,N} with x_{N,N} = c(e)^N c_r(e)^N x.
Report commutation_identity_5_1(const FockVector& x, Letter j, int N, const SpaceConfig& cfg);

/// Operator norm of a(e_j) on the truncated space in the q-metric.
double annihilator_norm(const FockSpace& space, Letter j);

/// ‖a(e_j) x_{N,N}‖² against 16 B²/A² D C q^{2N} ‖a(e_j)‖ ‖x_{N,N}‖².
std::vector<BoundCheck> smallness_bound_5_2(const BoundContext& ctx, int N, int degree_cap, int samples,
                                            std::uint64_t seed, Letter j = 1);

}  // namespace qfock
