#include "qfock/scalar.hpp"

#include <ostream>

#include "qfock/errors.hpp"

namespace qfock {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("malformed integer '" + std::string(s) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar::Scalar(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw DomainError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  return Scalar(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

std::string Scalar::str() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(value_))); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar scalar_pow_q(const Scalar& q, long n) {
  if (n == 0) return Scalar(1);
  if (n < 0) {
    if (q.is_zero()) throw DomainError("negative power of zero");
    return Scalar(1) / scalar_pow_q(q, -n);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(num, den);
}

bool inside_unit_interval(const Scalar& q) { return q.abs() < Scalar(1); }

}  // namespace qfock
