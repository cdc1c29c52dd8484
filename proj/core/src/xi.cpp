#include "qfock/xi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qfock/errors.hpp"
#include "qfock/graded_operator.hpp"
#include "qfock/product_constant.hpp"
#include "qfock/q_combinatorics.hpp"

namespace qfock {

namespace {

Scalar ev(const QPolynomial& p, const Scalar& q) { return p.eval(q); }

FockVector padded_or_zero(const FockVector& base, int r, int s) {
  if (r < 0 || s < 0) return {};
  return base.padded(r, s);
}

Json xi_params(int k, int r, int s) { return {{"k", k}, {"r", r}, {"s", s}}; }

}  // namespace

bool in_norm_window(const Scalar& q) { return Scalar(-1, 7) < q && q < Scalar(1, 4); }

XiVector make_xi(const FockVector& base, int k, int r, int s, const SpaceConfig& cfg) {
  XiVector xi{base, k, r, s, {}, Scalar(0)};
  if (r < 0 || s < 0) return xi;
  if (r + s + k > cfg.max_degree) throw CapacityError("padded vector exceeds max_degree");
  xi.vector = base.padded(r, s);
  xi.norm_sq = q_inner_recursive(xi.vector, xi.vector, cfg);
  return xi;
}

Report verify_annihilator_action(const FockVector& base, int k, int r, int s, const SpaceConfig& cfg) {
  Report rep;
  rep.title = "annihilators on padded vectors";
  rep.params = xi_params(k, r, s);
  const Scalar& q = cfg.q;
  const FockVector xi = base.padded(r, s);
  const Scalar one_r = ev(q_int(r), q);
  const Scalar one_s = ev(q_int(s), q);
  const FockVector left_expected = one_r * padded_or_zero(base, r - 1, s) +
                                   (scalar_pow_q(q, r + k) * one_s) * padded_or_zero(base, r, s - 1);
  const FockVector right_expected = (scalar_pow_q(q, s + k) * one_r) * padded_or_zero(base, r - 1, s) +
                                    one_s * padded_or_zero(base, r, s - 1);
  const FockVector left = annihilation(Side::left, kE, cfg).apply(xi);
  const FockVector right = annihilation(Side::right, kE, cfg).apply(xi);
  rep.checked = 2;
  if (left != left_expected) rep.fail_with({{"side", "left"}, {"got", left.to_json()}, {"expected", left_expected.to_json()}});
  if (right != right_expected) {
    rep.fail_with({{"side", "right"}, {"got", right.to_json()}, {"expected", right_expected.to_json()}});
  }
  return rep;
}

Report verify_annihilator_power(const FockVector& base, int k, int r, int s, int k_pow, const SpaceConfig& cfg) {
  Report rep;
  rep.title = "powers of annihilators on padded vectors";
  rep.params = xi_params(k, r, s);
  rep.params["power"] = k_pow;
  const Scalar& q = cfg.q;
  FockVector left_expected;
  FockVector right_expected;
  for (int i = 0; i <= k_pow; ++i) {
    const int j = k_pow - i;
    const Scalar binom = ev(q_binomial(k_pow, i), q);
    // left: falling([r], j) falling([s], i) q^{(k+r-j) i} ξ_{r-j, s-i}
    if (j <= r && i <= s) {
      const Scalar c = ev(q_falling_factorial(r, j), q) * ev(q_falling_factorial(s, i), q) * binom *
                       scalar_pow_q(q, static_cast<long>(k + r - j) * i);
      left_expected += c * base.padded(r - j, s - i);
    }
    // right: falling([r], i) falling([s], j) q^{(k+s-j) i} ξ_{r-i, s-j}
    if (i <= r && j <= s) {
      const Scalar c = ev(q_falling_factorial(r, i), q) * ev(q_falling_factorial(s, j), q) * binom *
                       scalar_pow_q(q, static_cast<long>(k + s - j) * i);
      right_expected += c * base.padded(r - i, s - j);
    }
  }
  FockVector left = base.padded(r, s);
  FockVector right = left;
  for (int p = 0; p < k_pow; ++p) {
    left = apply_annihilation(Side::left, kE, left, q);
    right = apply_annihilation(Side::right, kE, right, q);
  }
  rep.checked = 2;
  if (left != left_expected) rep.fail_with({{"side", "left"}, {"got", left.to_json()}, {"expected", left_expected.to_json()}});
  if (right != right_expected) {
    rep.fail_with({{"side", "right"}, {"got", right.to_json()}, {"expected", right_expected.to_json()}});
  }
  return rep;
}

Scalar xi_inner_closed_form(const Scalar& base_norm_sq, int k, int r, int s, int r2, int s2, const Scalar& q) {
  if (r < 0 || s < 0 || r2 < 0 || s2 < 0 || r + s != r2 + s2) return Scalar(0);
  const Scalar prefactor = ev(q_factorial(r2), q) * ev(q_factorial(s2), q);
  Scalar acc;
  for (int i = 0; i <= r2; ++i) {
    if (i > r || r2 - i > s) continue;
    const long exponent = static_cast<long>(r - i) * (r2 - i) + static_cast<long>(k) * (r - i) +
                          static_cast<long>(k) * (r2 - i);
    acc += scalar_pow_q(q, exponent) * ev(q_binomial(r, i), q) * ev(q_binomial(s, r2 - i), q);
  }
  return base_norm_sq * prefactor * acc;
}

Report verify_closed_form(const RadulescuCatalog& catalog, int max_k, int degree_cap) {
  const SpaceConfig& cfg = catalog.config();
  Report rep;
  rep.title = "closed-form inner products of padded vectors";
  rep.params = {{"max_k", max_k}, {"degree_cap", degree_cap}, {"q", cfg.q.str()}};
  degree_cap = std::min(degree_cap, cfg.max_degree);
  for (int k = 0; k <= std::min(max_k, degree_cap); ++k) {
    const TkBasis& tk = catalog.tk(k);
    for (std::size_t g = 0; g < tk.size(); ++g) {
      const FockVector& base = tk.generators[g];
      for (int n = k; n <= degree_cap; ++n) {
        for (int r = 0; r <= n - k; ++r) {
          for (int r2 = 0; r2 <= n - k; ++r2) {
            const int s = n - k - r;
            const int s2 = n - k - r2;
            const Scalar closed = xi_inner_closed_form(tk.norm_sq[g], k, r, s, r2, s2, cfg.q);
            const Scalar exact = q_inner_recursive(base.padded(r, s), base.padded(r2, s2), cfg);
            ++rep.checked;
            if (closed != exact) {
              rep.fail_with({{"k", k}, {"gen", g}, {"r", r}, {"s", s}, {"r2", r2}, {"s2", s2},
                             {"closed", closed.str()}, {"exact", exact.str()}});
            }
          }
        }
        // a mismatched total degree must give zero on both sides
        if (n + 1 <= degree_cap) {
          ++rep.checked;
          const Scalar closed = xi_inner_closed_form(tk.norm_sq[g], k, n - k, 0, n - k + 1, 0, cfg.q);
          const Scalar exact = q_inner_recursive(base.padded(n - k, 0), base.padded(n - k + 1, 0), cfg);
          if (!closed.is_zero() || !exact.is_zero()) rep.fail_with({{"k", k}, {"gen", g}, {"mismatched_degree", n}});
        }
      }
    }
  }
  return rep;
}

Report verify_orthogonality(const RadulescuCatalog& catalog, int degree_cap) {
  const SpaceConfig& cfg = catalog.config();
  Report rep;
  rep.title = "orthogonality of distinct families";
  rep.params = {{"degree_cap", degree_cap}, {"q", cfg.q.str()}};
  degree_cap = std::min(degree_cap, cfg.max_degree);
  for (int n = 0; n <= degree_cap; ++n) {
    const auto& list = catalog.entries(n);
    const auto g = catalog.space().gram(n);
    std::vector<std::vector<Scalar>> dense;
    std::vector<std::vector<Scalar>> g_dense;
    for (const auto& e : list) {
      dense.push_back(dense_component(e.vector, n, cfg.dim));
      g_dense.push_back(gram_apply(*g, dense.back()));
    }
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        const auto& ka = list[a].key;
        const auto& kb = list[b].key;
        if (ka.k == kb.k && ka.gen == kb.gen) continue;
        ++rep.checked;
        const Scalar v = dot(dense[a], g_dense[b]);
        if (!v.is_zero()) {
          rep.fail_with({{"degree", n}, {"first", {ka.k, ka.gen, ka.r, ka.s}}, {"second", {kb.k, kb.gen, kb.r, kb.s}},
                         {"inner", v.str()}});
        }
      }
    }
  }
  // different total degree, same family: zero by grading
  for (int k = 0; k <= degree_cap; ++k) {
    const TkBasis& tk = catalog.tk(k);
    for (std::size_t gidx = 0; gidx < tk.size(); ++gidx) {
      for (int n = k; n < degree_cap; ++n) {
        ++rep.checked;
        const Scalar v = q_inner_recursive(tk.generators[gidx].padded(n - k, 0),
                                           tk.generators[gidx].padded(0, n - k + 1), cfg);
        if (!v.is_zero()) rep.fail_with({{"k", k}, {"gen", gidx}, {"degrees", {n, n + 1}}});
      }
    }
  }
  return rep;
}

EstimateConstants estimate_constants(const Scalar& q) {
  EstimateConstants c;
  const double aq = std::abs(q.to_double());
  c.c_abs = constant_c(q.abs());
  c.d = constant_d(q);
  if (q.sign() >= 0) {
    c.e = 1.0 / constant_c(q);
    c.f = 1.0;
  } else {
    const double cube = std::pow(c.d * c.c_abs, 3);
    c.e = 1.0 / (c.d * c.c_abs) - aq * cube / (1.0 - aq);
    c.f = cube / (1.0 - aq);
  }
  return c;
}

Report verify_inner_estimates(const RadulescuCatalog& catalog, int degree_cap) {
  const SpaceConfig& cfg = catalog.config();
  Report rep;
  rep.title = "two-sided estimate of padded inner products";
  const EstimateConstants ec = estimate_constants(cfg.q);
  rep.params = {{"degree_cap", degree_cap}, {"q", cfg.q.str()}, {"E", ec.e}, {"F", ec.f}};
  if (ec.e <= 0.0 || !in_norm_window(cfg.q)) {
    rep.status = Status::inapplicable;
    rep.params["reason"] = ec.e <= 0.0 ? "E(q) <= 0" : "q outside (-1/7, 1/4)";
    return rep;
  }
  degree_cap = std::min(degree_cap, cfg.max_degree);
  const double aq = std::abs(cfg.q.to_double());
  double lower_margin = std::numeric_limits<double>::infinity();
  double upper_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= degree_cap; ++k) {
    const TkBasis& tk = catalog.tk(k);
    for (std::size_t g = 0; g < tk.size(); ++g) {
      for (int n = k; n <= degree_cap; ++n) {
        const double fact = q_factorial(n - k).eval(cfg.q).to_double();
        for (int r = 0; r <= n - k; ++r) {
          for (int r2 = 0; r2 <= r; ++r2) {
            const Scalar inner = catalog.space().inner(tk.generators[g].padded(r, n - k - r),
                                                       tk.generators[g].padded(r2, n - k - r2));
            const double value = std::abs((inner / tk.norm_sq[g]).to_double());
            const double weight = std::pow(aq, static_cast<double>(k) * (r - r2)) * fact;
            const double lo = ec.e * weight;
            const double hi = ec.f * weight;
            ++rep.checked;
            if (value < lo * (1 - 1e-9) || value > hi * (1 + 1e-9)) {
              rep.fail_with({{"k", k}, {"gen", g}, {"r", r}, {"r2", r2}, {"degree", n},
                             {"value", value}, {"lower", lo}, {"upper", hi}});
            }
            if (lo > 0) lower_margin = std::min(lower_margin, value / lo - 1);
            if (hi > 0) upper_margin = std::min(upper_margin, 1 - value / hi);
          }
        }
      }
    }
  }
  rep.window = {{"min_lower_margin", lower_margin}, {"min_upper_margin", upper_margin}};
  if (rep.passed()) rep.status = Status::holds;
  else rep.status = Status::violated;
  return rep;
}

Report verify_norm_corollary(const RadulescuCatalog& catalog, int degree_cap, bool force) {
  const SpaceConfig& cfg = catalog.config();
  Report rep;
  rep.title = "norm window of padded vectors";
  rep.params = {{"degree_cap", degree_cap}, {"q", cfg.q.str()}};
  if (!force && !in_norm_window(cfg.q)) {
    rep.status = Status::inapplicable;
    rep.params["reason"] = "q outside (-1/7, 1/4)";
    return rep;
  }
  degree_cap = std::min(degree_cap, cfg.max_degree);
  double worst = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= degree_cap; ++n) {
    for (const auto& e : catalog.entries(n)) {
      const Scalar base_norm = e.key.k == 0 ? Scalar(1) : catalog.tk(e.key.k).norm_sq[static_cast<std::size_t>(e.key.gen)];
      const Scalar ratio = e.norm_sq / base_norm;
      const Scalar fact = q_factorial(e.key.r + e.key.s).eval(cfg.q);
      ++rep.checked;
      if (Scalar(2) * ratio < fact || ratio > Scalar(2) * fact) {
        rep.fail_with({{"key", {e.key.k, e.key.gen, e.key.r, e.key.s}}, {"ratio", ratio.str()}, {"factorial", fact.str()}});
      }
      const double rel = (ratio / fact).to_double();
      worst = std::min({worst, rel - 0.5, 2.0 - rel});
    }
  }
  rep.window = {{"min_margin", worst}};
  rep.status = rep.passed() ? Status::holds : Status::violated;
  return rep;
}

Report verify_inclusion_relations(const RadulescuCatalog& catalog, int reach) {
  const SpaceConfig& cfg = catalog.config();
  Report rep;
  rep.title = "inclusion relations of spans";
  rep.params = {{"reach", reach}, {"q", cfg.q.str()}};
  for (int k = 0; k + reach <= cfg.max_degree; ++k) {
    const TkBasis& tk = catalog.tk(k);
    for (std::size_t g = 0; g < tk.size(); ++g) {
      std::vector<FockVector> ops;
      std::vector<FockVector> pads;
      for (int n = 0; n <= reach; ++n) {
        for (int m = 0; n + m <= reach; ++m) {
          FockVector v = tk.generators[g];
          for (int i = 0; i < m; ++i) {
            v = apply_creation(Side::right, kE, v) + apply_annihilation(Side::right, kE, v, cfg.q);
          }
          for (int i = 0; i < n; ++i) {
            v = apply_creation(Side::left, kE, v) + apply_annihilation(Side::left, kE, v, cfg.q);
          }
          ops.push_back(std::move(v));
          pads.push_back(tk.generators[g].padded(n, m));
        }
      }
      std::map<Word, std::size_t> columns;
      for (const auto* set : {&ops, &pads}) {
        for (const auto& v : *set) {
          for (const auto& [w, c] : v) columns.emplace(w, columns.size());
        }
      }
      auto to_matrix = [&](std::initializer_list<const std::vector<FockVector>*> sets) {
        std::size_t rows = 0;
        for (const auto* s : sets) rows += s->size();
        RationalMatrix m(rows, columns.size());
        std::size_t row = 0;
        for (const auto* s : sets) {
          for (const auto& v : *s) {
            for (const auto& [w, c] : v) m(row, columns.at(w)) = c;
            ++row;
          }
        }
        return m;
      };
      const auto r_ops = rank(to_matrix({&ops}));
      const auto r_pads = rank(to_matrix({&pads}));
      const auto r_both = rank(to_matrix({&ops, &pads}));
      ++rep.checked;
      if (r_ops != r_pads || r_ops != r_both) {
        rep.fail_with({{"k", k}, {"gen", g}, {"rank_ops", r_ops}, {"rank_pads", r_pads}, {"rank_union", r_both}});
      }
    }
  }
  return rep;
}

}  // namespace qfock
