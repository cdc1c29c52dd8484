#pragma once

/**
 * @file graded_operator.hpp
 * @brief Sparse block operators on the truncated Fock space.
 *
 * An operator is stored as a sum of homogeneous components, one per degree
 * shift; each component holds one sparse matrix per input degree mapping
 * degree-n coefficients to degree-(n+shift) coefficients. Anything that would
 * land above max_degree is dropped, which is the truncation convention all
 * identity checks account for through their safe windows.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qfock/check.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/scalar.hpp"
#include "qfock/word.hpp"

namespace qfock {

/// Column-compressed exact sparse matrix. Entries within a column are sorted
/// by row and never zero.
class SparseBlock {
 public:
  struct Entry {
    std::uint32_t row;
    Scalar value;
  };

  SparseBlock() = default;
  SparseBlock(std::uint64_t rows, std::uint64_t cols);

  [[nodiscard]] std::uint64_t rows() const { return rows_; }
  [[nodiscard]] std::uint64_t cols() const { return cols_.size(); }
  [[nodiscard]] const std::vector<Entry>& column(std::uint64_t j) const { return cols_[j]; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] Scalar at(std::uint64_t row, std::uint64_t col) const;

  /// Adds value at (row, col); columns must be filled in nondecreasing row
  /// order or via this method only (it keeps them sorted).
  void add(std::uint64_t row, std::uint64_t col, const Scalar& value);

  friend SparseBlock multiply(const SparseBlock& a, const SparseBlock& b);
  /// a + c * b
  friend SparseBlock axpy(const SparseBlock& a, const Scalar& c, const SparseBlock& b);
  friend bool operator==(const SparseBlock& a, const SparseBlock& b);

 private:
  std::uint64_t rows_ = 0;
  std::vector<std::vector<Entry>> cols_;
};

SparseBlock multiply(const SparseBlock& a, const SparseBlock& b);
SparseBlock axpy(const SparseBlock& a, const Scalar& c, const SparseBlock& b);
bool operator==(const SparseBlock& a, const SparseBlock& b);

class GradedOperator {
 public:
  /// The zero operator on the given truncated space.
  explicit GradedOperator(const SpaceConfig& cfg);

  static GradedOperator identity(const SpaceConfig& cfg);

  [[nodiscard]] const SpaceConfig& config() const { return cfg_; }

  /// The unique degree shift if the operator is homogeneous and nonzero.
  [[nodiscard]] std::optional<int> degree_shift() const;
  /// Shifts with at least one nonzero block.
  [[nodiscard]] std::vector<int> shifts() const;

  /// nullptr when the block is absent or the output degree is out of range.
  [[nodiscard]] const SparseBlock* block(int shift, int input_degree) const;
  void set_block(int shift, int input_degree, SparseBlock block);

  /// Throws CapacityError when v has a word longer than max_degree.
  [[nodiscard]] FockVector apply(const FockVector& v) const;

  GradedOperator& operator+=(const GradedOperator& rhs);
  GradedOperator& operator-=(const GradedOperator& rhs);
  friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
  friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
  friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);
  friend GradedOperator operator*(const Scalar& c, const GradedOperator& a);

  /// All blocks with input degree <= max_input_degree agree exactly.
  [[nodiscard]] bool equal_on(const GradedOperator& other, int max_input_degree) const;
  /// First disagreeing entry on the window, as a JSON record; null if none.
  [[nodiscard]] Json first_difference(const GradedOperator& other, int max_input_degree) const;

  /// this^k (identity for k = 0).
  [[nodiscard]] GradedOperator power(int k) const;

 private:
  void accumulate(const GradedOperator& rhs, const Scalar& c);

  SpaceConfig cfg_;
  // shift -> blocks indexed by input degree 0..max_degree
  std::map<int, std::vector<SparseBlock>> components_;
};

enum class Side { left, right };

/// c(e_i) (left: prepend) or c_r(e_i) (right: append). Degree-L input maps to 0.
GradedOperator creation(Side side, Letter i, const SpaceConfig& cfg);
/// a(e_i) with weights q^{pos-1} (left) or a_r(e_i) with q^{n-pos} (right).
GradedOperator annihilation(Side side, Letter i, const SpaceConfig& cfg);
/// Multiplies the degree-n component by q^n.
GradedOperator w_operator(const SpaceConfig& cfg);
/// s(e_i) = c(e_i) + a(e_i), or the right-handed s_r(e_i).
GradedOperator semicircular(Side side, Letter i, const SpaceConfig& cfg);

/// Applies a single left/right annihilator directly to a vector, without
/// building operator matrices (used on hot paths and by the recursive inner
/// product).
FockVector apply_annihilation(Side side, Letter i, const FockVector& v, const Scalar& q);
FockVector apply_creation(Side side, Letter i, const FockVector& v);

}  // namespace qfock
