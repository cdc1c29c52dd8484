#include "qfock/qpolynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qfock/errors.hpp"

namespace qfock {

QPolynomial::QPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

QPolynomial::QPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

QPolynomial QPolynomial::constant(long c) { return QPolynomial{c}; }

QPolynomial QPolynomial::monomial(std::size_t exponent, long c) {
  std::vector<mpz_class> v(exponent + 1, mpz_class(0));
  v[exponent] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class QPolynomial::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : mpz_class(0);
}

Scalar QPolynomial::eval(const Scalar& q) const {
  mpq_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q.raw();
    acc += mpq_class(*it);
  }
  return Scalar(std::move(acc));
}

double QPolynomial::eval(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + it->get_d();
  return acc;
}

std::string QPolynomial::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str(10);
  }
  out += ']';
  return out;
}

QPolynomial QPolynomial::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  }
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<mpz_class> v;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      v.emplace_back(c.get<long>());
    } else if (c.is_string()) {
      v.emplace_back(c.get<std::string>(), 10);
    } else {
      throw DomainError("polynomial coefficients must be integers");
    }
  }
  return QPolynomial(std::move(v));
}

std::string QPolynomial::pretty() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    mpz_class mag = ::abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str(10);
    if (i >= 1) os << 'q';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k, mpz_class(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.pretty(); }

}  // namespace qfock
