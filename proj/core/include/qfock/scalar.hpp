#pragma once

/**
 * @file scalar.hpp
 * @brief Exact rational scalars.
 *
 * Scalar is a thin value type over GMP's mpq_class. It is always kept in
 * lowest terms with a positive denominator, so structural equality is
 * numerical equality. Every coefficient that appears inside a Fock vector or
 * an operator block is a Scalar.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qfock {

class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);
  explicit Scalar(const mpz_class& integer) : value_(integer) {}
  explicit Scalar(mpq_class value);
  Scalar(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "n", "n/d" or "-n/d" (decimal integers). Throws DomainError on
  /// malformed input or a zero denominator.
  static Scalar parse(std::string_view text);

  /// "numerator/denominator" in decimal, e.g. "-3/7"; integers keep the
  /// "/1" suffix so the format is uniform.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] Scalar abs() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws DomainError when rhs is zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Adds a*b into *this without a temporary Scalar.
  void add_product(const Scalar& a, const Scalar& b);

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact q^n. n < 0 requires q != 0 (DomainError otherwise); q^0 = 1 for all q.
Scalar scalar_pow_q(const Scalar& q, long n);

/// |q| < 1 check used by every configuration entry point.
bool inside_unit_interval(const Scalar& q);

}  // namespace qfock
