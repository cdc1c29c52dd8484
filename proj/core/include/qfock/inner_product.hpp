#pragma once

/**
 * @file inner_product.hpp
 * @brief The q-inner product, computed two independent ways.
 *
 * The permutation-sum route evaluates
 *   <e_1...e_n, f_1...f_n>_q = sum over sigma in S_n of q^{inv(sigma)} prod <e_i, f_sigma(i)>
 * literally and is capped at degree 8. The recursive route peels the leading
 * letter, <f (x) u, v>_q = <u, a(f) v>_q, down to the vacuum. FockSpace keeps
 * one exact Gram matrix per degree (built by the same peeling recursion) for
 * the bulk computations of the basis and bound modules.
 */

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <Eigen/Dense>

#include "qfock/exact_linalg.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/scalar.hpp"
#include "qfock/word.hpp"

namespace qfock {

inline constexpr int kPermutationSumCap = 8;

/// Permutation-sum inner product. Throws CapabilityError if either vector
/// has a word longer than kPermutationSumCap.
Scalar q_inner_direct(const FockVector& u, const FockVector& v, const SpaceConfig& cfg);

/// Leading-letter recursion through the left annihilators; no degree cap.
Scalar q_inner_recursive(const FockVector& u, const FockVector& v, const SpaceConfig& cfg);

/// Degree-n component of v as a dense coefficient vector in word-index order.
std::vector<Scalar> dense_component(const FockVector& v, int n, int dim);
FockVector from_dense(const std::vector<Scalar>& coeffs, int n, int dim);
/// g * v for a square exact matrix, skipping zero coordinates of v.
std::vector<Scalar> gram_apply(const RationalMatrix& g, const std::vector<Scalar>& v);
Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

/// Truncated Fock space with a lazily filled per-degree Gram cache. Each
/// degree is computed at most once; concurrent callers block on the fill.
class FockSpace {
 public:
  explicit FockSpace(SpaceConfig cfg);

  [[nodiscard]] const SpaceConfig& config() const { return cfg_; }
  [[nodiscard]] const Scalar& q() const { return cfg_.q; }
  [[nodiscard]] int dim() const { return cfg_.dim; }
  [[nodiscard]] int max_degree() const { return cfg_.max_degree; }

  /// Exact Gram matrix of all degree-n words in index order.
  [[nodiscard]] std::shared_ptr<const RationalMatrix> gram(int n) const;
  [[nodiscard]] std::shared_ptr<const Eigen::MatrixXd> gram_double(int n) const;

  [[nodiscard]] Scalar inner(const FockVector& u, const FockVector& v) const;
  [[nodiscard]] Scalar norm_sq(const FockVector& v) const { return inner(v, v); }
  [[nodiscard]] double inner_double(const FockVector& u, const FockVector& v) const;

 private:
  SpaceConfig cfg_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const RationalMatrix>> exact_;
  mutable std::map<int, std::shared_ptr<const Eigen::MatrixXd>> floating_;
};

}  // namespace qfock
