#pragma once

/**
 * @file exact_linalg.hpp
 * @brief Dense linear algebra over the rationals.
 *
 * Row reduction is plain Gauss-Jordan with exact Scalars and the first
 * nonzero pivot in each column; sizes here stay in the hundreds, so no
 * fraction-free or modular tricks are needed.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qfock/scalar.hpp"

namespace qfock {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] RationalMatrix transpose() const;
  [[nodiscard]] Eigen::MatrixXd to_double() const;
  [[nodiscard]] bool is_symmetric() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column, with the free
/// coordinate set to 1.
std::vector<std::vector<Scalar>> kernel(RationalMatrix m);

/// Solves a x = b for square nonsingular a; nullopt if a is singular.
std::optional<std::vector<Scalar>> solve(RationalMatrix a, std::vector<Scalar> b);

/// Scales v to a primitive integer vector (cleared denominators, gcd of
/// numerators removed, first nonzero entry positive). Zero stays zero.
std::vector<Scalar> primitive_integer(std::vector<Scalar> v);

}  // namespace qfock
