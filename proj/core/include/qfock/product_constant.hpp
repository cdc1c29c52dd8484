#pragma once

#include <string>

#include "qfock/scalar.hpp"

namespace qfock {

enum class ProductKind {
  C,  ///< prod_{i>=1} 1/(1 - q^i)
  D,  ///< prod_{i>=1} (1 + |q|^i)
};

/// A truncated infinite product with a certified error bound:
/// truncation error of the partial product <= tail_bound <= requested
/// tolerance (float rounding in the partial product is not included).
struct ProductConstant {
  double value = 1.0;
  int truncation_index = 0;  ///< number of factors multiplied in
  double tail_bound = 0.0;
};

inline constexpr double kDefaultProductTolerance = 1e-12;

/// Throws DivergenceError for |q| >= 1 and DomainError for tol <= 0.
ProductConstant product_constant(ProductKind kind, const Scalar& q,
                                 double tol = kDefaultProductTolerance);

/// Shorthands used throughout the bound formulas.
double constant_c(const Scalar& q);
double constant_d(const Scalar& q);

std::string to_string(ProductKind kind);

}  // namespace qfock
