#include "qfock/inner_product.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "qfock/errors.hpp"
#include "qfock/graded_operator.hpp"

namespace qfock {

namespace {

struct PermutationTable {
  std::vector<std::vector<int>> perms;  // 0-based images
  std::vector<int> inversions;
};

PermutationTable permutations_of(int n) {
  PermutationTable t;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
      }
    }
    t.perms.push_back(p);
    t.inversions.push_back(inv);
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

bool same_content(const Word& a, const Word& b) {
  auto x = a.letters();
  auto y = b.letters();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// <u, v> for u, v homogeneous of degree n via <f u', v> = <u', a(f) v>.
Scalar peel(const FockVector& u, const FockVector& v, int n, int dim, const Scalar& q) {
  if (u.is_zero() || v.is_zero()) return Scalar(0);
  if (n == 0) return u.coefficient(Word{}) * v.coefficient(Word{});
  Scalar acc;
  for (int f = 0; f < dim; ++f) {
    FockVector stripped;
    for (const auto& [w, c] : u) {
      if (w[0] == f) stripped.add(w.erased(0), c);
    }
    if (stripped.is_zero()) continue;
    const FockVector reduced = apply_annihilation(Side::left, static_cast<Letter>(f), v, q);
    acc += peel(stripped, reduced, n - 1, dim, q);
  }
  return acc;
}

}  // namespace

Scalar q_inner_direct(const FockVector& u, const FockVector& v, const SpaceConfig& cfg) {
  if (u.max_degree() > kPermutationSumCap || v.max_degree() > kPermutationSumCap) {
    throw CapabilityError("permutation-sum inner product is capped at degree 8; use q_inner_recursive");
  }
  std::map<int, PermutationTable> tables;
  Scalar acc;
  for (const auto& [w, cw] : u) {
    const int n = w.length();
    for (const auto& [x, cx] : v.terms()) {
      if (x.length() != n || !same_content(w, x)) continue;
      auto it = tables.find(n);
      if (it == tables.end()) it = tables.emplace(n, permutations_of(n)).first;
      const PermutationTable& t = it->second;
      // histogram of inversion counts over permutations pairing w with x
      std::vector<long> hist(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
      for (std::size_t k = 0; k < t.perms.size(); ++k) {
        const auto& p = t.perms[k];
        bool match = true;
        for (int i = 0; i < n && match; ++i) match = w[i] == x[p[static_cast<std::size_t>(i)]];
        if (match) ++hist[static_cast<std::size_t>(t.inversions[k])];
      }
      Scalar value;
      for (std::size_t e = 0; e < hist.size(); ++e) {
        if (hist[e]) value += Scalar(hist[e]) * scalar_pow_q(cfg.q, static_cast<long>(e));
      }
      acc += cw * cx * value;
    }
  }
  return acc;
}

Scalar q_inner_recursive(const FockVector& u, const FockVector& v, const SpaceConfig& cfg) {
  Scalar acc;
  const int top = std::min(u.max_degree(), v.max_degree());
  for (int n = 0; n <= top; ++n) acc += peel(u.component(n), v.component(n), n, cfg.dim, cfg.q);
  return acc;
}

std::vector<Scalar> dense_component(const FockVector& v, int n, int dim) {
  SpaceConfig shape{dim, n, Scalar(0)};
  std::vector<Scalar> out(shape.block_size(n));
  for (const auto& [w, c] : v) {
    if (w.length() == n) out[w.index(dim)] = c;
  }
  return out;
}

FockVector from_dense(const std::vector<Scalar>& coeffs, int n, int dim) {
  FockVector out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) out.add(Word::from_index(i, n, dim), coeffs[i]);
  }
  return out;
}

std::vector<Scalar> gram_apply(const RationalMatrix& g, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(g.rows());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (!g(i, j).is_zero()) out[i].add_product(g(i, j), v[j]);
    }
  }
  return out;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc.add_product(a[i], b[i]);
  }
  return acc;
}

FockSpace::FockSpace(SpaceConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

std::shared_ptr<const RationalMatrix> FockSpace::gram(int n) const {
  std::lock_guard lock(mu_);
  if (auto it = exact_.find(n); it != exact_.end()) return it->second;

  // Fill every missing degree up to n; degree k peels into degree k-1.
  int start = 0;
  while (exact_.count(start)) ++start;
  for (int k = start; k <= n; ++k) {
    auto g = std::make_shared<RationalMatrix>(cfg_.block_size(k), cfg_.block_size(k));
    if (k == 0) {
      (*g)(0, 0) = Scalar(1);
    } else {
      const RationalMatrix& prev = *exact_.at(k - 1);
      const auto size = cfg_.block_size(k);
      const auto tail = cfg_.block_size(k - 1);
      std::vector<Scalar> powers(static_cast<std::size_t>(k), Scalar(1));
      for (int p = 1; p < k; ++p) powers[static_cast<std::size_t>(p)] = powers[static_cast<std::size_t>(p) - 1] * cfg_.q;
      for (std::uint64_t x = 0; x < size; ++x) {
        const Word wx = Word::from_index(x, k, cfg_.dim);
        for (int p = 0; p < k; ++p) {
          if (powers[static_cast<std::size_t>(p)].is_zero()) continue;
          const auto removed = wx.erased(p).index(cfg_.dim);
          const Letter f = wx[p];
          // every w with leading letter f pairs with x through position p
          for (std::uint64_t rest = 0; rest < tail; ++rest) {
            const Scalar& g_prev = prev(rest, removed);
            if (g_prev.is_zero()) continue;
            const std::uint64_t w = static_cast<std::uint64_t>(f) * tail + rest;
            (*g)(w, x).add_product(powers[static_cast<std::size_t>(p)], g_prev);
          }
        }
      }
    }
    exact_[k] = std::move(g);
  }
  return exact_.at(n);
}

std::shared_ptr<const Eigen::MatrixXd> FockSpace::gram_double(int n) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = floating_.find(n); it != floating_.end()) return it->second;
  }
  auto exact = gram(n);
  auto g = std::make_shared<const Eigen::MatrixXd>(exact->to_double());
  std::lock_guard lock(mu_);
  return floating_.emplace(n, std::move(g)).first->second;
}

Scalar FockSpace::inner(const FockVector& u, const FockVector& v) const {
  Scalar acc;
  const int top = std::min(u.max_degree(), v.max_degree());
  for (int n = 0; n <= top; ++n) {
    const FockVector un = u.component(n);
    if (un.is_zero()) continue;
    const FockVector vn = v.component(n);
    if (vn.is_zero()) continue;
    const auto g = gram(n);
    for (const auto& [w, cw] : un) {
      const auto i = w.index(cfg_.dim);
      Scalar row;
      for (const auto& [x, cx] : vn) {
        const Scalar& gij = (*g)(i, x.index(cfg_.dim));
        if (!gij.is_zero()) row.add_product(gij, cx);
      }
      if (!row.is_zero()) acc.add_product(cw, row);
    }
  }
  return acc;
}

double FockSpace::inner_double(const FockVector& u, const FockVector& v) const {
  double acc = 0.0;
  const int top = std::min(u.max_degree(), v.max_degree());
  for (int n = 0; n <= top; ++n) {
    const FockVector un = u.component(n);
    const FockVector vn = v.component(n);
    if (un.is_zero() || vn.is_zero()) continue;
    const auto g = gram_double(n);
    for (const auto& [w, cw] : un) {
      const auto i = static_cast<Eigen::Index>(w.index(cfg_.dim));
      for (const auto& [x, cx] : vn) {
        acc += cw.to_double() * cx.to_double() * (*g)(i, static_cast<Eigen::Index>(x.index(cfg_.dim)));
      }
    }
  }
  return acc;
}

}  // namespace qfock
