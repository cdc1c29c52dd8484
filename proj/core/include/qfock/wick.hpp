#pragma once

/**
 * @file wick.hpp
 * @brief Wick expansion of s(e_{i1} (x) ... (x) e_{in}) and the X, Y, Z, W
 * normal-ordering identities (X = a(e), Y = c(e), Z = c_r(e)).
 *
 * The coset representatives of S_n / (S_{n-i} x S_i) used here are the
 * (n-i, i) shuffles: the first n-i positions keep their relative order, as do
 * the last i.
 */

#include <vector>

#include "qfock/check.hpp"
#include "qfock/graded_operator.hpp"
#include "qfock/qpolynomial.hpp"
#include "qfock/word.hpp"

namespace qfock {

struct WickTerm {
  QPolynomial coefficient;  ///< q^{inversions}
  int inversions = 0;
  Word creation;            ///< letters of the creators, left to right
  Word annihilation;        ///< letters of the annihilators, left to right
};

std::vector<WickTerm> wick_expand(const Word& letters);

/// Σ q^{|σ|} c(..)...c(..) a(..)...a(..) as a graded matrix.
GradedOperator wick_operator(const Word& letters, const SpaceConfig& cfg);

/// The operator s(ξ) defined by s(Ω) = Id and
/// s(f (x) ξ) = s(f) s(ξ) - s(a(f) ξ), extended linearly. Independent of the
/// shuffle expansion.
GradedOperator s_recursive(const FockVector& xi, const SpaceConfig& cfg);

/// wick_operator(letters) Ω = letters.
Report wick_vacuum_check(const Word& letters, const SpaceConfig& cfg);

/// Shuffle expansion against s_recursive on input degrees <= L - n.
Report verify_wick_recursion(const Word& letters, const SpaceConfig& cfg);

/// Wick(w) s_r(e_i) = s_r(e_i) Wick(w) on input degrees <= L - n - 1.
Report verify_wick_right_commutation(const Word& letters, Letter i, const SpaceConfig& cfg);

/// X^m Y^n = Σ_i q^{(n-i)(m-i)} [i]! binom(n,i) binom(m,i) Y^{n-i} X^{m-i}.
Report verify_xy_expansion(int m, int n, const SpaceConfig& cfg);

/// X^m Z^n = Σ_i [i]! binom(n,i) binom(m,i) Z^{n-i} W^i X^{m-i}.
Report verify_xz_expansion(int m, int n, const SpaceConfig& cfg);

/// XY = qYX + 1, XZ = ZX + W, WZ = qZW, XW = qWX on degrees <= L - 1.
Report verify_wzw_relations(const SpaceConfig& cfg);

}  // namespace qfock
