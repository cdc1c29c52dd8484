#pragma once

/**
 * @file tk_basis.hpp
 * @brief Joint kernels T^k = ker a(e) ∩ ker a_r(e) in degree k.
 *
 * The kernel is found by exact Gaussian elimination on the stacked map
 * (a(e), a_r(e)) : H^{(x)k} -> H^{(x)(k-1)} (+) H^{(x)(k-1)}. The raw kernel
 * basis is then orthogonalized under <.,.>_q by square-root-free Gram-Schmidt
 * and every vector is rescaled to a primitive integer vector, so generators
 * of the same T^k are mutually q-orthogonal but not normalized.
 */

#include <cstddef>
#include <vector>

#include "qfock/check.hpp"
#include "qfock/exact_linalg.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/inner_product.hpp"

namespace qfock {

struct TkBasis {
  int k = 0;
  std::vector<FockVector> kernel;      ///< raw elimination output
  std::vector<FockVector> generators;  ///< q-orthogonal, primitive integer
  RationalMatrix gram;                 ///< Gram of generators (diagonal)
  std::vector<Scalar> norm_sq;         ///< diagonal of gram

  [[nodiscard]] std::size_t size() const { return generators.size(); }
};

/// Requires k <= max_degree of the space.
TkBasis compute_tk(int k, const FockSpace& space);

/// Orthogonalizes and rescales: fills generators, gram and norm_sq from
/// kernel. Exposed so cache loads can rebuild derived data.
void orthogonalize(TkBasis& basis, const FockSpace& space);

/// dim span{e (x) w, w (x) e : |w| = k-1}, the one-step images of s(e) and
/// s_r(e) projected to degree k. Computed by exact rank.
std::size_t s_k_dimension(int k, const SpaceConfig& cfg);

/// Kernel property, independence, diagonal positive Gram, and
/// dim T^k + dim S^k = d^k.
Report verify_tk(const TkBasis& basis, const FockSpace& space);

}  // namespace qfock
