#pragma once

/**
 * @file q_combinatorics.hpp
 * @brief q-integers, q-factorials, Gaussian binomials and their identities.
 *
 * Everything here lives in Z[q]: polynomials are compared coefficientwise,
 * so a passing identity is a proof for every value of q at once. Gaussian
 * binomials come from the Pascal recurrence (no polynomial division), and the
 * lattice-path enumerator is an independent second route to the same numbers.
 */

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qfock/check.hpp"
#include "qfock/qpolynomial.hpp"
#include "qfock/scalar.hpp"

namespace qfock {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0. Negative n: DomainError.
QPolynomial q_int(long n);

/// [n]_q! = [1]_q ... [n]_q; [0]_q! = 1. Negative n: DomainError.
QPolynomial q_factorial(long n);

/// [n]_q! / [n-j]_q! = [n-j+1]_q ... [n]_q (the falling q-factorial); zero
/// polynomial when j > n, 1 when j == 0.
QPolynomial q_falling_factorial(long n, long j);

/// Gaussian binomial; the zero polynomial whenever m < 0, m > n or n < 0.
QPolynomial q_binomial(long n, long m);

/// Triangular table of Gaussian binomials, rows 0..max_n, built by
/// binom(n+1, m) = binom(n, m) + q^{n-m+1} binom(n, m-1).
class QBinomialTable {
 public:
  explicit QBinomialTable(long max_n);

  [[nodiscard]] long max_n() const { return max_n_; }
  /// Zero polynomial outside 0 <= m <= n; DomainError for n > max_n.
  [[nodiscard]] const QPolynomial& at(long n, long m) const;

  /// Replaces one entry. Exists so that verification routines can be shown a
  /// deliberately broken table.
  void override_entry(long n, long m, QPolynomial value);

 private:
  long max_n_;
  std::vector<std::vector<QPolynomial>> rows_;
  QPolynomial zero_;
};

/// Number of inversions of a permutation of {1..m} given in one-line
/// notation. Throws DomainError if the input is not a bijection on {1..m}.
long inversions(std::span<const int> perm);

/// Sum of weights of all monotone lattice paths from (0,0) to
/// (horizontal, vertical): a step (i,j)->(i,j+1) has weight q^i, a step
/// (i,j)->(i+1,j) weight 1. Paths are enumerated one by one.
QPolynomial lattice_path_sum(long horizontal, long vertical);

/// Checks both Pascal forms for 0 <= n <= n_max and -1 <= m <= n+2 against
/// `table` (a fresh table when none is supplied; needs max_n >= n_max+1).
Report verify_pascal(long n_max, const QBinomialTable* table = nullptr);

/// Checks sum_i q^{(n1-i)(m-i)} binom(n1,i) binom(n2,m-i) = binom(n1+n2,m)
/// and cross-checks the right side against lattice_path_sum. DomainError on
/// negative arguments or m > n1+n2.
Report verify_path_identity(long n1, long n2, long m);

/// All (n1, n2, m) with n1, n2, m <= max and m <= n1 + n2.
Report verify_path_identity_range(long max);

/// Structural checks of the table: zero outside range, unit edges, symmetry,
/// nonnegative coefficients, degree m(n-m), and agreement with the path sum.
Report verify_binomial_table(long n_max);

/// |binom(n,m)_q|^{+-1} <= D(q) C(|q|) for 0 <= m <= n <= n_max, in float.
Report verify_binomial_bound(long n_max, const Scalar& q);

}  // namespace qfock
