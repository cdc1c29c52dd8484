#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "qfock/check.hpp"
#include "qfock/scalar.hpp"
#include "qfock/word.hpp"

namespace qfock {

/// Finitely supported vector in the algebraic Fock space. Zero coefficients
/// are never stored, so two vectors are equal iff their maps are equal.
class FockVector {
 public:
  using Map = std::map<Word, Scalar>;

  FockVector() = default;
  /// Single basic tensor with coefficient `coeff`.
  explicit FockVector(Word word, Scalar coeff = Scalar(1));

  static FockVector vacuum() { return FockVector(Word{}); }

  /// Adds coeff to the coefficient of `word`, erasing it if it cancels.
  void add(const Word& word, const Scalar& coeff);
  [[nodiscard]] Scalar coefficient(const Word& word) const;

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Highest word length present; -1 for the zero vector.
  [[nodiscard]] int max_degree() const;
  /// Restriction to words of length n (the Q_n projection).
  [[nodiscard]] FockVector component(int n) const;
  /// true when every word has length n (vacuously true for zero).
  [[nodiscard]] bool is_homogeneous(int n) const;

  /// e^{left} (x) v (x) e^{right}, applied word by word.
  [[nodiscard]] FockVector padded(int left, int right, Letter pad = kE) const;

  FockVector& operator+=(const FockVector& rhs);
  FockVector& operator-=(const FockVector& rhs);
  FockVector& operator*=(const Scalar& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, FockVector v) { return v *= c; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  /// {"01": "3/2", ...}; the vacuum serializes under the empty key.
  [[nodiscard]] Json to_json() const;
  static FockVector from_json(const Json& j);

 private:
  Map terms_;
};

}  // namespace qfock
