#include "qfock/graded_operator.hpp"

#include <algorithm>

#include "qfock/errors.hpp"

namespace qfock {

SparseBlock::SparseBlock(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols) {}

bool SparseBlock::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t SparseBlock::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Scalar SparseBlock::at(std::uint64_t row, std::uint64_t col) const {
  for (const auto& e : cols_[col]) {
    if (e.row == row) return e.value;
  }
  return Scalar(0);
}

void SparseBlock::add(std::uint64_t row, std::uint64_t col, const Scalar& value) {
  if (value.is_zero()) return;
  auto& column = cols_[col];
  const auto r = static_cast<std::uint32_t>(row);
  auto it = std::lower_bound(column.begin(), column.end(), r,
                             [](const Entry& e, std::uint32_t key) { return e.row < key; });
  if (it != column.end() && it->row == r) {
    it->value += value;
    if (it->value.is_zero()) column.erase(it);
  } else {
    column.insert(it, Entry{r, value});
  }
}

SparseBlock multiply(const SparseBlock& a, const SparseBlock& b) {
  SparseBlock out(a.rows(), b.cols());
  std::vector<Scalar> acc(a.rows());
  std::vector<char> touched(a.rows(), 0);
  std::vector<std::uint32_t> rows;
  for (std::uint64_t j = 0; j < b.cols(); ++j) {
    rows.clear();
    for (const auto& eb : b.column(j)) {
      for (const auto& ea : a.column(eb.row)) {
        if (!touched[ea.row]) {
          touched[ea.row] = 1;
          acc[ea.row] = Scalar(0);
          rows.push_back(ea.row);
        }
        acc[ea.row].add_product(ea.value, eb.value);
      }
    }
    std::sort(rows.begin(), rows.end());
    auto& column = out.cols_[j];
    for (auto r : rows) {
      touched[r] = 0;
      if (!acc[r].is_zero()) column.push_back({r, acc[r]});
    }
  }
  return out;
}

SparseBlock axpy(const SparseBlock& a, const Scalar& c, const SparseBlock& b) {
  SparseBlock out = a;
  if (out.cols_.empty() && out.rows_ == 0) {
    out = SparseBlock(b.rows(), b.cols());
  }
  for (std::uint64_t j = 0; j < b.cols(); ++j) {
    for (const auto& e : b.column(j)) out.add(e.row, j, c * e.value);
  }
  return out;
}

bool operator==(const SparseBlock& a, const SparseBlock& b) {
  if (a.cols() != b.cols()) return a.is_zero() && b.is_zero();
  for (std::uint64_t j = 0; j < a.cols(); ++j) {
    const auto& ca = a.column(j);
    const auto& cb = b.column(j);
    if (ca.size() != cb.size()) return false;
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (ca[k].row != cb[k].row || ca[k].value != cb[k].value) return false;
    }
  }
  return true;
}

GradedOperator::GradedOperator(const SpaceConfig& cfg) : cfg_(cfg) {}

GradedOperator GradedOperator::identity(const SpaceConfig& cfg) {
  GradedOperator op(cfg);
  for (int n = 0; n <= cfg.max_degree; ++n) {
    const auto size = cfg.block_size(n);
    SparseBlock b(size, size);
    for (std::uint64_t i = 0; i < size; ++i) b.add(i, i, Scalar(1));
    op.set_block(0, n, std::move(b));
  }
  return op;
}

std::vector<int> GradedOperator::shifts() const {
  std::vector<int> out;
  for (const auto& [shift, blocks] : components_) {
    if (std::any_of(blocks.begin(), blocks.end(), [](const SparseBlock& b) { return !b.is_zero(); })) {
      out.push_back(shift);
    }
  }
  return out;
}

std::optional<int> GradedOperator::degree_shift() const {
  const auto s = shifts();
  if (s.size() != 1) return std::nullopt;
  return s.front();
}

const SparseBlock* GradedOperator::block(int shift, int input_degree) const {
  const auto it = components_.find(shift);
  if (it == components_.end()) return nullptr;
  if (input_degree < 0 || input_degree > cfg_.max_degree) return nullptr;
  const int out = input_degree + shift;
  if (out < 0 || out > cfg_.max_degree) return nullptr;
  const SparseBlock& b = it->second[static_cast<std::size_t>(input_degree)];
  if (b.cols() == 0) return nullptr;
  return &b;
}

void GradedOperator::set_block(int shift, int input_degree, SparseBlock block) {
  const int out = input_degree + shift;
  if (input_degree < 0 || input_degree > cfg_.max_degree || out < 0 || out > cfg_.max_degree) return;
  auto& blocks = components_[shift];
  if (blocks.empty()) blocks.resize(static_cast<std::size_t>(cfg_.max_degree) + 1);
  blocks[static_cast<std::size_t>(input_degree)] = std::move(block);
}

FockVector GradedOperator::apply(const FockVector& v) const {
  if (v.max_degree() > cfg_.max_degree) throw CapacityError("vector exceeds truncation degree");
  FockVector out;
  for (const auto& [w, c] : v) {
    const int n = w.length();
    const auto col = w.index(cfg_.dim);
    for (const auto& [shift, blocks] : components_) {
      const SparseBlock* b = block(shift, n);
      if (!b) continue;
      for (const auto& e : b->column(col)) out.add(Word::from_index(e.row, n + shift, cfg_.dim), e.value * c);
    }
  }
  return out;
}

void GradedOperator::accumulate(const GradedOperator& rhs, const Scalar& c) {
  for (const auto& [shift, blocks] : rhs.components_) {
    for (int n = 0; n <= cfg_.max_degree; ++n) {
      const SparseBlock* b = rhs.block(shift, n);
      if (!b) continue;
      const SparseBlock* mine = block(shift, n);
      set_block(shift, n, mine ? axpy(*mine, c, *b) : axpy(SparseBlock(b->rows(), b->cols()), c, *b));
    }
  }
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& rhs) {
  accumulate(rhs, Scalar(1));
  return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& rhs) {
  accumulate(rhs, Scalar(-1));
  return *this;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
  GradedOperator out(a.cfg_);
  for (const auto& [sb, blocks_b] : b.components_) {
    for (const auto& [sa, blocks_a] : a.components_) {
      for (int n = 0; n <= a.cfg_.max_degree; ++n) {
        const SparseBlock* bb = b.block(sb, n);
        if (!bb) continue;
        const SparseBlock* ab = a.block(sa, n + sb);
        if (!ab) continue;
        SparseBlock prod = multiply(*ab, *bb);
        const SparseBlock* existing = out.block(sa + sb, n);
        out.set_block(sa + sb, n, existing ? axpy(*existing, Scalar(1), prod) : std::move(prod));
      }
    }
  }
  return out;
}

GradedOperator operator*(const Scalar& c, const GradedOperator& a) {
  GradedOperator out(a.cfg_);
  out.accumulate(a, c);
  return out;
}

namespace {
// Zero block stand-in so that missing and all-zero blocks compare equal.
bool block_equal(const SparseBlock* x, const SparseBlock* y) {
  if (!x && !y) return true;
  if (!x) return y->is_zero();
  if (!y) return x->is_zero();
  return *x == *y;
}
}  // namespace

bool GradedOperator::equal_on(const GradedOperator& other, int max_input_degree) const {
  return first_difference(other, max_input_degree).is_null();
}

Json GradedOperator::first_difference(const GradedOperator& other, int max_input_degree) const {
  std::vector<int> all = shifts();
  for (int s : other.shifts()) {
    if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
  }
  std::sort(all.begin(), all.end());
  for (int shift : all) {
    for (int n = 0; n <= std::min(max_input_degree, cfg_.max_degree); ++n) {
      const SparseBlock* x = block(shift, n);
      const SparseBlock* y = other.block(shift, n);
      if (block_equal(x, y)) continue;
      const auto cols = cfg_.block_size(n);
      const auto rows_count = cfg_.block_size(n + shift);
      for (std::uint64_t j = 0; j < cols; ++j) {
        for (std::uint64_t i = 0; i < rows_count; ++i) {
          const Scalar vx = x ? x->at(i, j) : Scalar(0);
          const Scalar vy = y ? y->at(i, j) : Scalar(0);
          if (vx != vy) {
            return Json{{"shift", shift},
                        {"input", Word::from_index(j, n, cfg_.dim).str()},
                        {"output", Word::from_index(i, n + shift, cfg_.dim).str()},
                        {"lhs", vx.str()},
                        {"rhs", vy.str()}};
          }
        }
      }
    }
  }
  return nullptr;
}

GradedOperator GradedOperator::power(int k) const {
  GradedOperator out = identity(cfg_);
  for (int i = 0; i < k; ++i) out = *this * out;
  return out;
}

FockVector apply_creation(Side side, Letter i, const FockVector& v) {
  FockVector out;
  for (const auto& [w, c] : v) out.add(side == Side::left ? w.prepended(i) : w.appended(i), c);
  return out;
}

FockVector apply_annihilation(Side side, Letter i, const FockVector& v, const Scalar& q) {
  FockVector out;
  int cached_n = -1;
  std::vector<Scalar> powers;
  for (const auto& [w, c] : v) {
    const int n = w.length();
    if (n != cached_n) {
      powers.assign(static_cast<std::size_t>(n), Scalar(1));
      for (int p = 1; p < n; ++p) powers[static_cast<std::size_t>(p)] = powers[static_cast<std::size_t>(p) - 1] * q;
      cached_n = n;
    }
    for (int pos = 0; pos < n; ++pos) {
      if (w[pos] != i) continue;
      // left: q^{pos} (0-based), right: q^{n-1-pos}
      const Scalar& weight = powers[static_cast<std::size_t>(side == Side::left ? pos : n - 1 - pos)];
      if (weight.is_zero()) continue;
      out.add(w.erased(pos), weight * c);
    }
  }
  return out;
}

GradedOperator creation(Side side, Letter i, const SpaceConfig& cfg) {
  GradedOperator op(cfg);
  for (int n = 0; n < cfg.max_degree; ++n) {
    const auto cols = cfg.block_size(n);
    SparseBlock b(cfg.block_size(n + 1), cols);
    for (std::uint64_t j = 0; j < cols; ++j) {
      const Word w = Word::from_index(j, n, cfg.dim);
      const Word image = side == Side::left ? w.prepended(i) : w.appended(i);
      b.add(image.index(cfg.dim), j, Scalar(1));
    }
    op.set_block(+1, n, std::move(b));
  }
  return op;
}

GradedOperator annihilation(Side side, Letter i, const SpaceConfig& cfg) {
  GradedOperator op(cfg);
  for (int n = 1; n <= cfg.max_degree; ++n) {
    const auto cols = cfg.block_size(n);
    SparseBlock b(cfg.block_size(n - 1), cols);
    for (std::uint64_t j = 0; j < cols; ++j) {
      const FockVector image = apply_annihilation(side, i, FockVector(Word::from_index(j, n, cfg.dim)), cfg.q);
      for (const auto& [w, c] : image) b.add(w.index(cfg.dim), j, c);
    }
    op.set_block(-1, n, std::move(b));
  }
  return op;
}

GradedOperator w_operator(const SpaceConfig& cfg) {
  GradedOperator op(cfg);
  for (int n = 0; n <= cfg.max_degree; ++n) {
    const auto size = cfg.block_size(n);
    const Scalar factor = scalar_pow_q(cfg.q, n);
    SparseBlock b(size, size);
    for (std::uint64_t j = 0; j < size; ++j) b.add(j, j, factor);
    op.set_block(0, n, std::move(b));
  }
  return op;
}

GradedOperator semicircular(Side side, Letter i, const SpaceConfig& cfg) {
  return creation(side, i, cfg) + annihilation(side, i, cfg);
}

}  // namespace qfock
