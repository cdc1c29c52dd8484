#include "qfock/wick.hpp"

#include <algorithm>
#include <map>

#include "qfock/errors.hpp"
#include "qfock/q_combinatorics.hpp"

namespace qfock {

namespace {

struct Ladder {
  std::vector<GradedOperator> c;
  std::vector<GradedOperator> a;
};

Ladder ladder(const SpaceConfig& cfg) {
  Ladder l;
  for (int i = 0; i < cfg.dim; ++i) {
    l.c.push_back(creation(Side::left, static_cast<Letter>(i), cfg));
    l.a.push_back(annihilation(Side::left, static_cast<Letter>(i), cfg));
  }
  return l;
}

Report identity_report(std::string title, Json params, const GradedOperator& lhs, const GradedOperator& rhs,
                       int window) {
  Report r;
  r.title = std::move(title);
  r.params = std::move(params);
  const int top = lhs.config().max_degree;
  window = std::min(window, top);
  r.window = {{"max_input_degree", window}};
  if (window < 0) {
    r.status = Status::skipped;
    r.skipped = static_cast<std::size_t>(top + 1);
    return r;
  }
  r.checked = static_cast<std::size_t>(window + 1);
  r.skipped = static_cast<std::size_t>(top - window);
  Json diff = lhs.first_difference(rhs, window);
  if (!diff.is_null()) r.fail_with(std::move(diff));
  return r;
}

Scalar at_q(const QPolynomial& p, const SpaceConfig& cfg) { return p.eval(cfg.q); }

}  // namespace

std::vector<WickTerm> wick_expand(const Word& letters) {
  const int n = letters.length();
  std::vector<WickTerm> out;
  for (int i = 0; i <= n; ++i) {
    // mask[p] = 1 marks position p as an annihilator slot
    std::vector<int> mask(static_cast<std::size_t>(n), 0);
    std::fill(mask.end() - i, mask.end(), 1);
    do {
      WickTerm t;
      std::vector<Letter> cre;
      std::vector<Letter> ann;
      int zeros_after = 0;
      // inversions: pairs (creator position > annihilator position)
      for (int p = n - 1; p >= 0; --p) {
        if (mask[static_cast<std::size_t>(p)]) {
          t.inversions += zeros_after;
        } else {
          ++zeros_after;
        }
      }
      for (int p = 0; p < n; ++p) {
        (mask[static_cast<std::size_t>(p)] ? ann : cre).push_back(letters[p]);
      }
      t.creation = Word(std::move(cre));
      t.annihilation = Word(std::move(ann));
      t.coefficient = QPolynomial::monomial(static_cast<std::size_t>(t.inversions));
      out.push_back(std::move(t));
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  return out;
}

GradedOperator wick_operator(const Word& letters, const SpaceConfig& cfg) {
  const Ladder l = ladder(cfg);
  GradedOperator total(cfg);
  for (const auto& t : wick_expand(letters)) {
    GradedOperator prod = GradedOperator::identity(cfg);
    // rightmost factor acts first
    for (int p = t.annihilation.length() - 1; p >= 0; --p) prod = l.a[t.annihilation[p]] * prod;
    for (int p = t.creation.length() - 1; p >= 0; --p) prod = l.c[t.creation[p]] * prod;
    total += at_q(t.coefficient, cfg) * prod;
  }
  return total;
}

GradedOperator s_recursive(const FockVector& xi, const SpaceConfig& cfg) {
  std::vector<GradedOperator> s;
  for (int i = 0; i < cfg.dim; ++i) s.push_back(semicircular(Side::left, static_cast<Letter>(i), cfg));
  std::map<Word, GradedOperator> memo;
  // explicit recursion on words through a local lambda
  auto word_op = [&](auto&& self, const Word& w) -> GradedOperator {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    GradedOperator result = GradedOperator::identity(cfg);
    if (!w.empty()) {
      const Letter f = w[0];
      const Word rest = w.erased(0);
      result = s[f] * self(self, rest);
      const FockVector reduced = apply_annihilation(Side::left, f, FockVector(rest), cfg.q);
      for (const auto& [u, c] : reduced) result -= c * self(self, u);
    }
    memo.emplace(w, result);
    return result;
  };
  GradedOperator total(cfg);
  for (const auto& [w, c] : xi) total += c * word_op(word_op, w);
  return total;
}

Report wick_vacuum_check(const Word& letters, const SpaceConfig& cfg) {
  Report r;
  r.title = "Wick operator on the vacuum";
  r.params = {{"word", letters.str()}, {"q", cfg.q.str()}};
  if (letters.length() > cfg.max_degree) throw CapacityError("word longer than max_degree");
  const FockVector got = wick_operator(letters, cfg).apply(FockVector::vacuum());
  r.checked = 1;
  if (got != FockVector(letters)) r.fail_with({{"got", got.to_json()}});
  return r;
}

Report verify_wick_recursion(const Word& letters, const SpaceConfig& cfg) {
  return identity_report("Wick expansion against the s(f ξ) recursion",
                         {{"word", letters.str()}, {"q", cfg.q.str()}}, wick_operator(letters, cfg),
                         s_recursive(FockVector(letters), cfg), cfg.max_degree - letters.length());
}

Report verify_wick_right_commutation(const Word& letters, Letter i, const SpaceConfig& cfg) {
  const GradedOperator w = wick_operator(letters, cfg);
  const GradedOperator sr = semicircular(Side::right, i, cfg);
  return identity_report("Wick operator commutes with s_r",
                         {{"word", letters.str()}, {"letter", i}, {"q", cfg.q.str()}}, w * sr, sr * w,
                         cfg.max_degree - letters.length() - 1);
}

Report verify_xy_expansion(int m, int n, const SpaceConfig& cfg) {
  const GradedOperator x = annihilation(Side::left, kE, cfg);
  const GradedOperator y = creation(Side::left, kE, cfg);
  GradedOperator rhs(cfg);
  for (int i = 0; i <= std::min(m, n); ++i) {
    const Scalar c = scalar_pow_q(cfg.q, static_cast<long>(n - i) * (m - i)) * at_q(q_factorial(i), cfg) *
                     at_q(q_binomial(n, i), cfg) * at_q(q_binomial(m, i), cfg);
    rhs += c * (y.power(n - i) * x.power(m - i));
  }
  return identity_report("X^m Y^n normal ordering", {{"m", m}, {"n", n}, {"q", cfg.q.str()}},
                         x.power(m) * y.power(n), rhs, cfg.max_degree - n);
}

Report verify_xz_expansion(int m, int n, const SpaceConfig& cfg) {
  const GradedOperator x = annihilation(Side::left, kE, cfg);
  const GradedOperator z = creation(Side::right, kE, cfg);
  const GradedOperator w = w_operator(cfg);
  GradedOperator rhs(cfg);
  for (int i = 0; i <= std::min(m, n); ++i) {
    const Scalar c = at_q(q_factorial(i), cfg) * at_q(q_binomial(n, i), cfg) * at_q(q_binomial(m, i), cfg);
    rhs += c * (z.power(n - i) * (w.power(i) * x.power(m - i)));
  }
  return identity_report("X^m Z^n normal ordering", {{"m", m}, {"n", n}, {"q", cfg.q.str()}},
                         x.power(m) * z.power(n), rhs, cfg.max_degree - n);
}

Report verify_wzw_relations(const SpaceConfig& cfg) {
  const GradedOperator x = annihilation(Side::left, kE, cfg);
  const GradedOperator y = creation(Side::left, kE, cfg);
  const GradedOperator z = creation(Side::right, kE, cfg);
  const GradedOperator w = w_operator(cfg);
  const GradedOperator id = GradedOperator::identity(cfg);
  const int window = cfg.max_degree - 1;
  Report total;
  total.title = "X, Y, Z, W relations";
  total.params = {{"q", cfg.q.str()}, {"max_degree", cfg.max_degree}};
  total.window = {{"max_input_degree", window}};
  absorb(total, identity_report("XY = qYX + 1", {}, x * y, cfg.q * (y * x) + id, window));
  absorb(total, identity_report("XZ = ZX + W", {}, x * z, z * x + w, window));
  absorb(total, identity_report("WZ = qZW", {}, w * z, cfg.q * (z * w), window));
  absorb(total, identity_report("XW = qWX", {}, x * w, cfg.q * (w * x), window));
  return total;
}

}  // namespace qfock
