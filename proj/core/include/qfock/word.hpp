#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "qfock/scalar.hpp"

namespace qfock {

using Letter = std::uint8_t;

/// The distinguished unit vector e of the real Hilbert space.
inline constexpr Letter kE = 0;

/// Truncated q-Fock space over a d-dimensional real Hilbert space with
/// orthonormal basis letters 0..d-1: all words of length <= max_degree.
struct SpaceConfig {
  int dim = 2;
  int max_degree = 6;
  Scalar q;

  /// Throws ConfigError unless 1 <= dim <= 10, max_degree >= 0, |q| < 1.
  void validate() const;
  /// d^n, the dimension of the degree-n tensor power.
  [[nodiscard]] std::uint64_t block_size(int n) const;
  /// sum_{n <= max_degree} d^n
  [[nodiscard]] std::uint64_t total_dimension() const;

  friend bool operator==(const SpaceConfig&, const SpaceConfig&) = default;
};

/// A basic tensor e_{i1} (x) ... (x) e_{in}; the empty word is the vacuum.
///
/// Words order by length first, then lexicographically, so iterating a
/// map keyed by Word visits degrees in increasing order.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Digit string, "01" = e_0 (x) e_1. Throws DomainError on non-digits.
  static Word parse(std::string_view digits);
  /// n copies of one letter.
  static Word repeat(Letter letter, int n);
  /// The word with base-d index `index` among words of length n (first
  /// letter most significant).
  static Word from_index(std::uint64_t index, int n, int dim);

  [[nodiscard]] int length() const { return static_cast<int>(letters_.size()); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::uint64_t index(int dim) const;
  [[nodiscard]] std::string str() const;

  /// Word without the letter at position `pos` (0-based).
  [[nodiscard]] Word erased(int pos) const;
  [[nodiscard]] Word prepended(Letter letter) const;
  [[nodiscard]] Word appended(Letter letter) const;
  /// e^{left} (x) *this (x) e^{right}
  [[nodiscard]] Word padded(int left, int right, Letter pad = kE) const;
  [[nodiscard]] Word concat(const Word& tail) const;
  [[nodiscard]] int count(Letter letter) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Every word of length n in index order.
std::vector<Word> all_words(int n, int dim);

}  // namespace qfock
