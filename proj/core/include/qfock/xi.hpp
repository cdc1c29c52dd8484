#pragma once

/**
 * @file xi.hpp
 * @brief The padded vectors ξ_{r,s} and their closed-form identities.
 *
 * Bases ξ ∈ T^k are unnormalized; formulas stated for unit ξ are applied
 * after scaling by <ξ, ξ>_q, so no square roots enter the exact checks.
 */

#include "qfock/catalog.hpp"
#include "qfock/check.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/inner_product.hpp"
#include "qfock/scalar.hpp"

namespace qfock {

struct XiVector {
  FockVector base;
  int k = 0;
  int r = 0;
  int s = 0;
  FockVector vector;
  Scalar norm_sq;
};

/// e^{(x)r} (x) base (x) e^{(x)s}; the zero vector if r < 0 or s < 0.
/// Throws CapacityError if r + s + k exceeds max_degree.
XiVector make_xi(const FockVector& base, int k, int r, int s, const SpaceConfig& cfg);

/// a(e) ξ_{r,s} = [r] ξ_{r-1,s} + q^{r+k} [s] ξ_{r,s-1} and the mirrored
/// a_r(e) ξ_{r,s} = q^{s+k} [r] ξ_{r-1,s} + [s] ξ_{r,s-1}, against the
/// annihilation matrices.
Report verify_annihilator_action(const FockVector& base, int k, int r, int s, const SpaceConfig& cfg);

/// Both k_pow-th power formulas against iterated application.
Report verify_annihilator_power(const FockVector& base, int k, int r, int s, int k_pow, const SpaceConfig& cfg);

/// <ξ_{r,s}, ξ_{r2,s2}>_q from the closed form, scaled by base_norm_sq.
Scalar xi_inner_closed_form(const Scalar& base_norm_sq, int k, int r, int s, int r2, int s2, const Scalar& q);

/// Closed form against the recursive inner product for every generator of
/// T^k, k <= max_k, and every pair of paddings with total degree <= cap.
Report verify_closed_form(const RadulescuCatalog& catalog, int max_k, int degree_cap);

/// Exact vanishing of <ξ^i_{r,s}, ξ^j_{r',s'}> whenever i != j or the total
/// degrees differ, over all catalog vectors of degree <= degree_cap.
Report verify_orthogonality(const RadulescuCatalog& catalog, int degree_cap);

struct EstimateConstants {
  double c_abs = 1.0;  ///< C(|q|)
  double d = 1.0;      ///< D(q)
  double e = 1.0;      ///< E(q)
  double f = 1.0;      ///< F(q)
};

/// E and F from the two explicit sign cases.
EstimateConstants estimate_constants(const Scalar& q);

/// E |q|^{k(r-r')} [r+s]! <= |<ξ_{r,s}, ξ_{r',s'}>| / <ξ,ξ> <= F |q|^{k(r-r')} [r+s]!
/// for r >= r'. Inapplicable when E(q) <= 0.
Report verify_inner_estimates(const RadulescuCatalog& catalog, int degree_cap);

/// The norm window of the corollary for the unit-normalized padding:
/// exactly checked 1/2 [r+s]! <= <ξ_{r,s}, ξ_{r,s}> / <ξ,ξ> <= 2 [r+s]!.
/// Reports inapplicable outside -1/7 < q < 1/4 unless forced.
Report verify_norm_corollary(const RadulescuCatalog& catalog, int degree_cap, bool force = false);

/// span{s(e)^n s_r(e)^m ξ : n + m <= reach} equals span{ξ_{r,s} : r + s <= reach}
/// for every generator of degree k with k + reach <= max_degree.
Report verify_inclusion_relations(const RadulescuCatalog& catalog, int reach);

/// true iff -1/7 < q < 1/4, the window where the norm corollary and the
/// inner-product estimates are asserted.
bool in_norm_window(const Scalar& q);

}  // namespace qfock
