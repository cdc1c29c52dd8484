#include "qfock/product_constant.hpp"

#include <cmath>
#include <limits>

#include "qfock/errors.hpp"

namespace qfock {

ProductConstant product_constant(ProductKind kind, const Scalar& q, double tol) {
  if (!inside_unit_interval(q)) throw DivergenceError("infinite product diverges for |q| >= 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  ProductConstant out;
  if (q.is_zero()) return out;

  const double x = q.to_double();
  const double ax = std::abs(x);

  double partial = 1.0;
  double power = 1.0;   // x^i
  double apower = 1.0;  // |x|^i
  for (int i = 1;; ++i) {
    power *= x;
    apower *= ax;
    partial *= kind == ProductKind::C ? 1.0 / (1.0 - power) : 1.0 + apower;

    // |log| of the remaining factors: sum_{j>i} |x|^j / (1 - |x|^j) for C and
    // sum_{j>i} |x|^j for D, both dominated by a geometric tail.
    const double next = apower * ax;
    const double geometric = next / (1.0 - ax);
    const double log_tail = kind == ProductKind::C ? geometric / (1.0 - next) : geometric;
    const double truncation = std::abs(partial) * std::expm1(log_tail);
    // float rounding grows with i, so only the truncation tail is certified
    if (truncation <= tol) {
      out.value = partial;
      out.truncation_index = i;
      out.tail_bound = truncation;
      return out;
    }
  }
}

double constant_c(const Scalar& q) { return product_constant(ProductKind::C, q).value; }

double constant_d(const Scalar& q) { return product_constant(ProductKind::D, q).value; }

std::string to_string(ProductKind kind) { return kind == ProductKind::C ? "C" : "D"; }

}  // namespace qfock
