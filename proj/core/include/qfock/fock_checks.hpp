#pragma once

/**
 * @file fock_checks.hpp
 * @brief Exact structural checks on the truncated Fock space.
 */

#include "qfock/check.hpp"
#include "qfock/graded_operator.hpp"
#include "qfock/inner_product.hpp"

namespace qfock {

/// <op u, v>_q = <u, adjoint v>_q for all basis words u of degree <= window
/// and all v of matching degree. Checked as the matrix identity
/// B^T G_{n+shift} = G_n A, which covers every word pair at once.
Report adjoint_check(const GradedOperator& op, const GradedOperator& adjoint, const FockSpace& space,
                     int window);
/// Default window max_degree - 1.
Report adjoint_check(const GradedOperator& op, const GradedOperator& adjoint, const FockSpace& space);

/// a(e_i) c(e_j) - q c(e_j) a(e_i) = δ_ij Id on degrees <= L-1, all i, j,
/// for the chosen side.
Report verify_q_commutation(Side side, const SpaceConfig& cfg);

/// c(e_i) c_r(e_j) = c_r(e_j) c(e_i) on degrees <= L-2.
Report verify_left_right_commute(const SpaceConfig& cfg);

/// <e^{(x)n}, e^{(x)n}>_q = [n]_q! for n <= L.
Report verify_power_norms(const FockSpace& space);

/// Min eigenvalue of the degree-n Gram above margin for n <= max_n.
Report verify_gram_positive(const FockSpace& space, int max_n, double margin = 1e-10);

/// Permutation sum, leading-letter recursion and the cached Gram agree on
/// every pair of words of degree <= max_n (capped at the permutation limit).
Report verify_inner_oracles(const FockSpace& space, int max_n);

/// Adjoint pairs (c, a), (c_r, a_r) for every letter, and W, s, s_r self-adjoint.
Report verify_adjoints(const FockSpace& space);

}  // namespace qfock
