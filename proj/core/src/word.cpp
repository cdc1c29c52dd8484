#include "qfock/word.hpp"

#include <algorithm>

#include "qfock/errors.hpp"

namespace qfock {

void SpaceConfig::validate() const {
  if (dim < 1 || dim > 10) throw ConfigError("dim must lie in [1, 10]");
  if (max_degree < 0) throw ConfigError("max_degree must be nonnegative");
  if (!inside_unit_interval(q)) throw ConfigError("q must satisfy |q| < 1, got " + q.str());
}

std::uint64_t SpaceConfig::block_size(int n) const {
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) size *= static_cast<std::uint64_t>(dim);
  return size;
}

std::uint64_t SpaceConfig::total_dimension() const {
  std::uint64_t total = 0;
  for (int n = 0; n <= max_degree; ++n) total += block_size(n);
  return total;
}

Word Word::parse(std::string_view digits) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError("word letters must be decimal digits");
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return Word(std::move(letters));
}

Word Word::repeat(Letter letter, int n) {
  return Word(std::vector<Letter>(static_cast<std::size_t>(std::max(n, 0)), letter));
}

Word Word::from_index(std::uint64_t index, int n, int dim) {
  std::vector<Letter> letters(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] = static_cast<Letter>(index % static_cast<std::uint64_t>(dim));
    index /= static_cast<std::uint64_t>(dim);
  }
  return Word(std::move(letters));
}

std::uint64_t Word::index(int dim) const {
  std::uint64_t idx = 0;
  for (Letter l : letters_) idx = idx * static_cast<std::uint64_t>(dim) + l;
  return idx;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(static_cast<char>('0' + l));
  return s;
}

Word Word::erased(int pos) const {
  std::vector<Letter> v = letters_;
  v.erase(v.begin() + pos);
  return Word(std::move(v));
}

Word Word::prepended(Letter letter) const {
  std::vector<Letter> v;
  v.reserve(letters_.size() + 1);
  v.push_back(letter);
  v.insert(v.end(), letters_.begin(), letters_.end());
  return Word(std::move(v));
}

Word Word::appended(Letter letter) const {
  std::vector<Letter> v = letters_;
  v.push_back(letter);
  return Word(std::move(v));
}

Word Word::padded(int left, int right, Letter pad) const {
  std::vector<Letter> v(static_cast<std::size_t>(left), pad);
  v.insert(v.end(), letters_.begin(), letters_.end());
  v.insert(v.end(), static_cast<std::size_t>(right), pad);
  return Word(std::move(v));
}

Word Word::concat(const Word& tail) const {
  std::vector<Letter> v = letters_;
  v.insert(v.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(v));
}

int Word::count(Letter letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

std::vector<Word> all_words(int n, int dim) {
  SpaceConfig cfg{dim, n, Scalar(0)};
  const auto size = cfg.block_size(n);
  std::vector<Word> out;
  out.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) out.push_back(Word::from_index(i, n, dim));
  return out;
}

}  // namespace qfock
