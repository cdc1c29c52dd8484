#include "qfock/tk_basis.hpp"

#include "qfock/errors.hpp"
#include "qfock/graded_operator.hpp"

namespace qfock {

namespace {

RationalMatrix stacked_annihilators(int k, const SpaceConfig& cfg) {
  const auto cols = cfg.block_size(k);
  const auto half = cfg.block_size(k - 1);
  RationalMatrix m(2 * half, cols);
  for (std::uint64_t j = 0; j < cols; ++j) {
    const FockVector w(Word::from_index(j, k, cfg.dim));
    for (const auto& [u, c] : apply_annihilation(Side::left, kE, w, cfg.q)) m(u.index(cfg.dim), j) += c;
    for (const auto& [u, c] : apply_annihilation(Side::right, kE, w, cfg.q)) m(half + u.index(cfg.dim), j) += c;
  }
  return m;
}

}  // namespace

void orthogonalize(TkBasis& basis, const FockSpace& space) {
  const int k = basis.k;
  const int dim = space.dim();
  const auto g = space.gram(k);
  std::vector<std::vector<Scalar>> done;
  std::vector<std::vector<Scalar>> g_done;  // G * u for finished u
  std::vector<Scalar> norms;
  for (const auto& raw : basis.kernel) {
    std::vector<Scalar> v = dense_component(raw, k, dim);
    for (std::size_t i = 0; i < done.size(); ++i) {
      const Scalar c = dot(v, g_done[i]) / norms[i];
      if (c.is_zero()) continue;
      for (std::size_t x = 0; x < v.size(); ++x) {
        if (!done[i][x].is_zero()) v[x] -= c * done[i][x];
      }
    }
    v = primitive_integer(std::move(v));
    auto gv = gram_apply(*g, v);
    norms.push_back(dot(v, gv));
    done.push_back(std::move(v));
    g_done.push_back(std::move(gv));
  }
  basis.generators.clear();
  for (const auto& v : done) basis.generators.push_back(from_dense(v, k, dim));
  basis.norm_sq = norms;
  basis.gram = RationalMatrix(done.size(), done.size());
  for (std::size_t i = 0; i < done.size(); ++i) {
    for (std::size_t j = 0; j < done.size(); ++j) basis.gram(i, j) = dot(done[i], g_done[j]);
  }
}

TkBasis compute_tk(int k, const FockSpace& space) {
  const SpaceConfig& cfg = space.config();
  if (k < 0 || k > cfg.max_degree) throw CapacityError("T^k requested above max_degree");
  TkBasis basis;
  basis.k = k;
  if (k == 0) {
    basis.kernel.push_back(FockVector::vacuum());
  } else {
    for (auto& v : kernel(stacked_annihilators(k, cfg))) {
      basis.kernel.push_back(from_dense(primitive_integer(std::move(v)), k, cfg.dim));
    }
  }
  orthogonalize(basis, space);
  return basis;
}

std::size_t s_k_dimension(int k, const SpaceConfig& cfg) {
  if (k == 0) return 0;
  const auto tail = cfg.block_size(k - 1);
  const auto size = cfg.block_size(k);
  RationalMatrix m(2 * tail, size);
  for (std::uint64_t i = 0; i < tail; ++i) {
    const Word w = Word::from_index(i, k - 1, cfg.dim);
    m(i, w.prepended(kE).index(cfg.dim)) = Scalar(1);
    m(tail + i, w.appended(kE).index(cfg.dim)) = Scalar(1);
  }
  return rank(std::move(m));
}

Report verify_tk(const TkBasis& basis, const FockSpace& space) {
  const SpaceConfig& cfg = space.config();
  Report r;
  r.title = "joint kernel T^k";
  r.params = {{"k", basis.k}, {"dim", cfg.dim}, {"q", cfg.q.str()}};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& gen = basis.generators[i];
    ++r.checked;
    if (!gen.is_homogeneous(basis.k)) r.fail_with({{"generator", i}, {"problem", "not homogeneous"}});
    if (basis.k > 0) {
      for (Side side : {Side::left, Side::right}) {
        ++r.checked;
        if (!apply_annihilation(side, kE, gen, cfg.q).is_zero()) {
          r.fail_with({{"generator", i}, {"problem", side == Side::left ? "a(e) != 0" : "a_r(e) != 0"}});
        }
      }
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ++r.checked;
      const Scalar expected = space.inner(gen, basis.generators[j]);
      if (basis.gram(i, j) != expected) r.fail_with({{"gram_entry", {i, j}}});
      if (i != j && !expected.is_zero()) r.fail_with({{"not_orthogonal", {i, j}}});
    }
    ++r.checked;
    if (basis.norm_sq[i].sign() <= 0) r.fail_with({{"generator", i}, {"problem", "nonpositive norm"}});
  }
  RationalMatrix coords(basis.size(), cfg.block_size(basis.k));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto v = dense_component(basis.generators[i], basis.k, cfg.dim);
    for (std::size_t x = 0; x < v.size(); ++x) coords(i, x) = v[x];
  }
  ++r.checked;
  if (rank(std::move(coords)) != basis.size()) r.fail_with({{"problem", "generators dependent"}});
  ++r.checked;
  const auto s_dim = s_k_dimension(basis.k, cfg);
  if (basis.size() + s_dim != cfg.block_size(basis.k)) {
    r.fail_with({{"dim_T", basis.size()}, {"dim_S", s_dim}, {"expected_total", cfg.block_size(basis.k)}});
  }
  return r;
}

}  // namespace qfock
