#include "qfock/fock_checks.hpp"

#include <algorithm>

#include <Eigen/Dense>

#include "qfock/q_combinatorics.hpp"

namespace qfock {

namespace {

// rows x cols dense product of a sparse block's transpose with a dense matrix
RationalMatrix transpose_times(const SparseBlock& b, const RationalMatrix& g) {
  RationalMatrix out(b.cols(), g.cols());
  for (std::uint64_t i = 0; i < b.cols(); ++i) {
    for (const auto& e : b.column(i)) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (!g(e.row, j).is_zero()) out(i, j).add_product(e.value, g(e.row, j));
      }
    }
  }
  return out;
}

RationalMatrix times(const RationalMatrix& g, const SparseBlock& a) {
  RationalMatrix out(g.rows(), a.cols());
  for (std::uint64_t j = 0; j < a.cols(); ++j) {
    for (const auto& e : a.column(j)) {
      for (std::size_t i = 0; i < g.rows(); ++i) {
        if (!g(i, e.row).is_zero()) out(i, j).add_product(g(i, e.row), e.value);
      }
    }
  }
  return out;
}

std::vector<int> merged_shifts(const GradedOperator& op, const GradedOperator& adjoint) {
  std::vector<int> all = op.shifts();
  for (int s : adjoint.shifts()) {
    if (std::find(all.begin(), all.end(), -s) == all.end()) all.push_back(-s);
  }
  std::sort(all.begin(), all.end());
  return all;
}

Report operator_identity(std::string title, Json params, const GradedOperator& lhs, const GradedOperator& rhs,
                         int window) {
  Report r;
  r.title = std::move(title);
  r.params = std::move(params);
  const int top = lhs.config().max_degree;
  window = std::min(window, top);
  r.window = {{"max_input_degree", window}};
  r.checked = static_cast<std::size_t>(std::max(window + 1, 0));
  r.skipped = static_cast<std::size_t>(top - window);
  Json diff = lhs.first_difference(rhs, window);
  if (!diff.is_null()) r.fail_with(std::move(diff));
  return r;
}

}  // namespace

Report adjoint_check(const GradedOperator& op, const GradedOperator& adjoint, const FockSpace& space, int window) {
  const SpaceConfig& cfg = space.config();
  Report r;
  r.title = "adjoint pairing";
  r.params = {{"q", cfg.q.str()}, {"dim", cfg.dim}};
  window = std::min(window, cfg.max_degree);
  r.window = {{"max_input_degree", window}};
  for (int shift : merged_shifts(op, adjoint)) {
    for (int n = 0; n <= window; ++n) {
      const int out = n + shift;
      if (out < 0 || out > cfg.max_degree) continue;
      const auto rows_out = cfg.block_size(out);
      const auto cols_in = cfg.block_size(n);
      const SparseBlock zero_b(rows_out, cols_in);
      const SparseBlock zero_a(cols_in, rows_out);
      const SparseBlock* b = op.block(shift, n);
      const SparseBlock* a = adjoint.block(-shift, out);
      const RationalMatrix lhs = transpose_times(b ? *b : zero_b, *space.gram(out));
      const RationalMatrix rhs = times(*space.gram(n), a ? *a : zero_a);
      r.checked += cols_in * rows_out;
      for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
          if (lhs(i, j) != rhs(i, j)) {
            r.fail_with({{"u", Word::from_index(i, n, cfg.dim).str()},
                         {"v", Word::from_index(j, out, cfg.dim).str()},
                         {"lhs", lhs(i, j).str()},
                         {"rhs", rhs(i, j).str()}});
          }
        }
      }
    }
  }
  return r;
}

Report adjoint_check(const GradedOperator& op, const GradedOperator& adjoint, const FockSpace& space) {
  return adjoint_check(op, adjoint, space, space.max_degree() - 1);
}

Report verify_q_commutation(Side side, const SpaceConfig& cfg) {
  Report total;
  total.title = side == Side::left ? "q-commutation a(e_i)c(e_j) - q c(e_j)a(e_i)"
                                   : "q-commutation a_r(e_i)c_r(e_j) - q c_r(e_j)a_r(e_i)";
  total.params = {{"q", cfg.q.str()}, {"dim", cfg.dim}, {"max_degree", cfg.max_degree}};
  const GradedOperator id = GradedOperator::identity(cfg);
  const GradedOperator zero(cfg);
  for (int i = 0; i < cfg.dim; ++i) {
    const auto a = annihilation(side, static_cast<Letter>(i), cfg);
    for (int j = 0; j < cfg.dim; ++j) {
      const auto c = creation(side, static_cast<Letter>(j), cfg);
      const GradedOperator lhs = a * c - cfg.q * (c * a);
      absorb(total, operator_identity("pair", {{"i", i}, {"j", j}}, lhs, i == j ? id : zero, cfg.max_degree - 1));
    }
  }
  total.window = {{"max_input_degree", cfg.max_degree - 1}};
  return total;
}

Report verify_left_right_commute(const SpaceConfig& cfg) {
  Report total;
  total.title = "left and right creators commute";
  total.params = {{"q", cfg.q.str()}, {"dim", cfg.dim}, {"max_degree", cfg.max_degree}};
  for (int i = 0; i < cfg.dim; ++i) {
    const auto c = creation(Side::left, static_cast<Letter>(i), cfg);
    for (int j = 0; j < cfg.dim; ++j) {
      const auto cr = creation(Side::right, static_cast<Letter>(j), cfg);
      absorb(total, operator_identity("pair", {{"i", i}, {"j", j}}, c * cr, cr * c, cfg.max_degree - 2));
    }
  }
  total.window = {{"max_input_degree", cfg.max_degree - 2}};
  return total;
}

Report verify_power_norms(const FockSpace& space) {
  const SpaceConfig& cfg = space.config();
  Report r;
  r.title = "norm of e^n is [n]_q!";
  r.params = {{"q", cfg.q.str()}, {"max_degree", cfg.max_degree}};
  for (int n = 0; n <= cfg.max_degree; ++n) {
    const FockVector v(Word::repeat(kE, n));
    const Scalar got = space.norm_sq(v);
    const Scalar want = q_factorial(n).eval(cfg.q);
    ++r.checked;
    if (got != want) r.fail_with({{"n", n}, {"got", got.str()}, {"expected", want.str()}});
    if (n <= kPermutationSumCap) {
      ++r.checked;
      const Scalar direct = q_inner_direct(v, v, cfg);
      if (direct != want) r.fail_with({{"n", n}, {"route", "direct"}, {"got", direct.str()}});
    }
  }
  return r;
}

Report verify_gram_positive(const FockSpace& space, int max_n, double margin) {
  const SpaceConfig& cfg = space.config();
  Report r;
  r.title = "Gram matrices positive definite";
  r.params = {{"q", cfg.q.str()}, {"dim", cfg.dim}, {"max_n", max_n}, {"margin", margin}};
  double worst = 1.0;
  for (int n = 0; n <= std::min(max_n, cfg.max_degree); ++n) {
    ++r.checked;
    const auto g = space.gram(n);
    if (!g->is_symmetric()) r.fail_with({{"n", n}, {"problem", "not symmetric"}});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(*space.gram_double(n), Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    worst = std::min(worst, lo);
    if (!(lo > margin)) r.fail_with({{"n", n}, {"min_eigenvalue", lo}});
  }
  r.window = {{"min_eigenvalue", worst}};
  return r;
}

Report verify_inner_oracles(const FockSpace& space, int max_n) {
  const SpaceConfig& cfg = space.config();
  Report r;
  r.title = "inner product oracle agreement";
  max_n = std::min({max_n, cfg.max_degree, kPermutationSumCap});
  r.params = {{"q", cfg.q.str()}, {"dim", cfg.dim}, {"max_n", max_n}};
  for (int n = 0; n <= max_n; ++n) {
    const auto words = all_words(n, cfg.dim);
    const auto g = space.gram(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const FockVector u(words[i]);
      for (std::size_t j = 0; j < words.size(); ++j) {
        const FockVector v(words[j]);
        const Scalar direct = q_inner_direct(u, v, cfg);
        const Scalar recursive = q_inner_recursive(u, v, cfg);
        ++r.checked;
        if (direct != recursive || direct != (*g)(i, j)) {
          r.fail_with({{"u", words[i].str()}, {"v", words[j].str()}, {"direct", direct.str()},
                       {"recursive", recursive.str()}, {"gram", (*g)(i, j).str()}});
        }
      }
    }
  }
  return r;
}

Report verify_adjoints(const FockSpace& space) {
  const SpaceConfig& cfg = space.config();
  Report total;
  total.title = "adjoint pairs";
  total.params = {{"q", cfg.q.str()}, {"dim", cfg.dim}, {"max_degree", cfg.max_degree}};
  auto tag = [](Report rep, std::string name) {
    rep.title = std::move(name);
    return rep;
  };
  for (int i = 0; i < cfg.dim; ++i) {
    const auto l = static_cast<Letter>(i);
    const std::string suffix = "(e_" + std::to_string(i) + ")";
    absorb(total, tag(adjoint_check(creation(Side::left, l, cfg), annihilation(Side::left, l, cfg), space),
                      "c" + suffix));
    absorb(total, tag(adjoint_check(creation(Side::right, l, cfg), annihilation(Side::right, l, cfg), space),
                      "c_r" + suffix));
    const auto s = semicircular(Side::left, l, cfg);
    const auto sr = semicircular(Side::right, l, cfg);
    // s has a +1 part, so its self-pairing is only clean below the top degree
    absorb(total, tag(adjoint_check(s, s, space, cfg.max_degree - 1), "s" + suffix));
    absorb(total, tag(adjoint_check(sr, sr, space, cfg.max_degree - 1), "s_r" + suffix));
  }
  const auto w = w_operator(cfg);
  absorb(total, tag(adjoint_check(w, w, space, cfg.max_degree), "W"));
  return total;
}

}  // namespace qfock
