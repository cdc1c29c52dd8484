#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qfock/scalar.hpp"

namespace qfock {

/// Integer polynomial in the indeterminate q, stored densely by ascending
/// exponent. Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient list and equality is list equality.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::initializer_list<long> coefficients);
  explicit QPolynomial(std::vector<mpz_class> coefficients);

  static QPolynomial constant(long c);
  /// c * q^exponent
  static QPolynomial monomial(std::size_t exponent, long c = 1);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] mpz_class coefficient(std::size_t exponent) const;
  [[nodiscard]] const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  /// Horner evaluation at a rational point.
  [[nodiscard]] Scalar eval(const Scalar& q) const;
  /// Float evaluation, used only by the bound checks.
  [[nodiscard]] double eval(double q) const;

  /// JSON integer array, ascending exponent: "[1,1,1]" for 1+q+q^2, "[]" for 0.
  [[nodiscard]] std::string to_json() const;
  static QPolynomial from_json(std::string_view text);

  /// Human-readable form, e.g. "1 + 2q + q^2".
  [[nodiscard]] std::string pretty() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  /// Multiplies by q^k.
  [[nodiscard]] QPolynomial shifted(std::size_t k) const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

}  // namespace qfock
