#include "qfock/catalog.hpp"

#include <cstdint>

#include "qfock/errors.hpp"
#include "qfock/graded_operator.hpp"
#include "qfock/q_combinatorics.hpp"
#include "qfock/tk_cache.hpp"

namespace qfock {

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

// Zero when the denominator vanishes mod p; callers fall back to exact rank then.
std::optional<std::uint64_t> reduce(const Scalar& s) {
  const std::uint64_t den = mpz_fdiv_ui(s.raw().get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(s.raw().get_num_mpz_t(), kPrime);
  return mul_mod(num, pow_mod(den, kPrime - 2));
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], kPrime - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mul_mod(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] + kPrime - mul_mod(f, m[rank][j])) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RadulescuCatalog::RadulescuCatalog(std::shared_ptr<const FockSpace> space, std::vector<TkBasis> bases)
    : space_(std::move(space)), bases_(std::move(bases)) {
  const int top = space_->max_degree();
  const int dim = space_->dim();
  by_degree_.resize(static_cast<std::size_t>(top) + 1);
  gram_generators_.resize(bases_.size());
  for (const auto& b : bases_) {
    const auto g = space_->gram(b.k);
    for (const auto& gen : b.generators) {
      gram_generators_[static_cast<std::size_t>(b.k)].push_back(gram_apply(*g, dense_component(gen, b.k, dim)));
    }
  }
  for (int n = 0; n <= top; ++n) {
    auto& list = by_degree_[static_cast<std::size_t>(n)];
    const FockVector power(Word::repeat(kE, n));
    list.push_back({CatalogKey{0, 0, n, 0}, power, q_factorial(n).eval(space_->q())});
    for (int k = 1; k <= n; ++k) {
      const TkBasis& b = bases_[static_cast<std::size_t>(k)];
      for (std::size_t j = 0; j < b.size(); ++j) {
        for (int r = 0; r <= n - k; ++r) {
          const FockVector v = b.generators[j].padded(r, n - k - r);
          list.push_back({CatalogKey{k, static_cast<int>(j), r, n - k - r}, v, space_->norm_sq(v)});
        }
        Family fam{k, static_cast<int>(j), n, RationalMatrix()};
        const auto m = static_cast<std::size_t>(n - k + 1);
        RationalMatrix gram(m, m);
        const std::size_t base = list.size() - m;
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t c = a; c < m; ++c) {
            gram(a, c) = a == c ? list[base + a].norm_sq : space_->inner(list[base + a].vector, list[base + c].vector);
            gram(c, a) = gram(a, c);
          }
        }
        fam.inverse_gram = RationalMatrix(m, m);
        for (std::size_t c = 0; c < m; ++c) {
          std::vector<Scalar> unit(m);
          unit[c] = Scalar(1);
          auto col = solve(gram, unit);
          if (!col) throw CatalogError("singular family Gram matrix");
          for (std::size_t a = 0; a < m; ++a) fam.inverse_gram(a, c) = (*col)[a];
        }
        families_.emplace(std::make_pair(n, std::make_pair(k, static_cast<int>(j))), std::move(fam));
      }
    }
    for (std::size_t i = 0; i < list.size(); ++i) index_[list[i].key] = {n, i};
  }
}

std::shared_ptr<const RadulescuCatalog> RadulescuCatalog::build(std::shared_ptr<const FockSpace> space,
                                                               const TkCache* cache) {
  std::vector<TkBasis> bases;
  for (int k = 0; k <= space->max_degree(); ++k) {
    bases.push_back(cache ? cache->get(k, *space).basis : compute_tk(k, *space));
  }
  return std::shared_ptr<const RadulescuCatalog>(new RadulescuCatalog(std::move(space), std::move(bases)));
}

const CatalogEntry* RadulescuCatalog::find(const CatalogKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return nullptr;
  return &by_degree_[static_cast<std::size_t>(it->second.first)][it->second.second];
}

const CatalogEntry& RadulescuCatalog::at(const CatalogKey& key) const {
  const CatalogEntry* e = find(key);
  if (!e) throw CatalogError("no catalog vector for the requested indices");
  return *e;
}

CoefficientMap RadulescuCatalog::expand(const FockVector& x) const {
  if (x.max_degree() > max_degree()) throw CapacityError("vector exceeds catalog truncation");
  const Scalar& q = space_->q();
  const int dim = space_->dim();
  CoefficientMap out;
  for (int n = 0; n <= x.max_degree(); ++n) {
    const FockVector xn = x.component(n);
    if (xn.is_zero()) continue;
    // rhs[(k, gen)][r] = <ξ, a_r(e)^s a(e)^r x_n>
    std::map<std::pair<int, int>, std::vector<Scalar>> rhs;
    FockVector left = xn;
    for (int r = 0; r <= n; ++r) {
      if (r > 0) left = apply_annihilation(Side::left, kE, left, q);
      if (left.is_zero()) break;
      if (r == n) {
        const Scalar c = left.coefficient(Word{}) / entries(n).front().norm_sq;
        if (!c.is_zero()) out[CatalogKey{0, 0, n, 0}] = c;
        break;
      }
      FockVector both = left;
      for (int s = 0; n - r - s >= 1; ++s) {
        if (s > 0) both = apply_annihilation(Side::right, kE, both, q);
        if (both.is_zero()) break;
        const int k = n - r - s;
        const auto& gens = gram_generators_[static_cast<std::size_t>(k)];
        if (gens.empty()) continue;
        const auto dense = dense_component(both, k, dim);
        for (std::size_t j = 0; j < gens.size(); ++j) {
          auto& b = rhs[{k, static_cast<int>(j)}];
          if (b.empty()) b.resize(static_cast<std::size_t>(n - k + 1));
          b[static_cast<std::size_t>(r)] = dot(gens[j], dense);
        }
      }
    }
    for (const auto& [kg, b] : rhs) {
      const Family& fam = families_.at({n, kg});
      for (std::size_t r = 0; r < b.size(); ++r) {
        Scalar c;
        for (std::size_t c2 = 0; c2 < b.size(); ++c2) {
          if (!b[c2].is_zero()) c.add_product(fam.inverse_gram(r, c2), b[c2]);
        }
        if (!c.is_zero()) out[CatalogKey{kg.first, kg.second, static_cast<int>(r), n - kg.first - static_cast<int>(r)}] = c;
      }
    }
  }
  return out;
}

FockVector RadulescuCatalog::assemble(const CoefficientMap& coeffs) const {
  FockVector out;
  for (const auto& [key, c] : coeffs) {
    const CatalogEntry& e = at(key);
    for (const auto& [w, v] : e.vector) out.add(w, c * v);
  }
  return out;
}

CoefficientMap expand_by_elimination(const RadulescuCatalog& catalog, const FockVector& x) {
  const SpaceConfig& cfg = catalog.config();
  if (x.max_degree() > catalog.max_degree()) throw CapacityError("vector exceeds catalog truncation");
  CoefficientMap out;
  for (int n = 0; n <= x.max_degree(); ++n) {
    const FockVector xn = x.component(n);
    if (xn.is_zero()) continue;
    const auto& list = catalog.entries(n);
    const auto size = cfg.block_size(n);
    if (list.size() != size) throw CatalogError("catalog size differs from block dimension");
    RationalMatrix m(size, size);
    for (std::size_t c = 0; c < list.size(); ++c) {
      for (const auto& [w, v] : list[c].vector) m(w.index(cfg.dim), c) = v;
    }
    auto sol = solve(std::move(m), dense_component(xn, n, cfg.dim));
    if (!sol) throw CatalogError("catalog is rank deficient at degree " + std::to_string(n));
    for (std::size_t c = 0; c < list.size(); ++c) {
      if (!(*sol)[c].is_zero()) out[list[c].key] = (*sol)[c];
    }
  }
  return out;
}

std::size_t catalog_rank(const RadulescuCatalog& catalog, int degree) {
  const SpaceConfig& cfg = catalog.config();
  const auto& list = catalog.entries(degree);
  const auto size = cfg.block_size(degree);
  std::vector<std::vector<std::uint64_t>> mod(list.size(), std::vector<std::uint64_t>(size, 0));
  bool reducible = true;
  for (std::size_t i = 0; i < list.size() && reducible; ++i) {
    for (const auto& [w, v] : list[i].vector) {
      auto red = reduce(v);
      if (!red) {
        reducible = false;
        break;
      }
      mod[i][w.index(cfg.dim)] = *red;
    }
  }
  if (reducible) {
    const std::size_t r = rank_mod_p(std::move(mod));
    if (r == std::min<std::size_t>(list.size(), size)) return r;
  }
  RationalMatrix m(list.size(), size);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const auto& [w, v] : list[i].vector) m(i, w.index(cfg.dim)) = v;
  }
  return rank(std::move(m));
}

}  // namespace qfock
