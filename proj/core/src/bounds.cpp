#include "qfock/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "qfock/errors.hpp"
#include "qfock/wick.hpp"

namespace qfock {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// base^e with the conventions 0^0 = 1 and 0^{negative} = +inf.
double power_or_inf(double base, long e) {
  if (base == 0.0) return e > 0 ? 0.0 : (e == 0 ? 1.0 : kInf);
  return std::pow(base, static_cast<double>(e));
}

double norm_sq_double(const FockSpace& space, const FockVector& v) { return space.norm_sq(v).to_double(); }

BoundCheck inapplicable(std::string lemma, Json params, const std::string& reason) {
  BoundCheck b;
  b.lemma = std::move(lemma);
  b.params = std::move(params);
  b.params["reason"] = reason;
  b.status = Status::inapplicable;
  return b;
}

void finish(BoundCheck& b) {
  b.status = bound_status(b.lhs, b.rhs);
}

FockVector double_pad(const FockVector& x, int n) {
  FockVector v = x;
  for (int i = 0; i < n; ++i) v = apply_creation(Side::right, kE, v);
  for (int i = 0; i < n; ++i) v = apply_creation(Side::left, kE, v);
  return v;
}

// v * 2^{-e} with 2^{2e} close to norm_sq, so high-k generators with very
// large integer coefficients stay inside the double range.
FockVector balanced(const CatalogEntry& e) {
  const long bits = static_cast<long>(mpz_sizeinbase(e.norm_sq.numerator().get_mpz_t(), 2)) -
                    static_cast<long>(mpz_sizeinbase(e.norm_sq.denominator().get_mpz_t(), 2));
  return scalar_pow_q(Scalar(1, 2), bits / 2) * e.vector;
}

}  // namespace

CoefficientProjection::CoefficientProjection(int cutoff, Side side, std::shared_ptr<const RadulescuCatalog> catalog)
    : cutoff_(cutoff), side_(side), catalog_(std::move(catalog)) {
  if (cutoff_ < 0) throw DomainError("projection cutoff must be nonnegative");
}

CoefficientMap CoefficientProjection::mask(const CoefficientMap& coeffs) const {
  CoefficientMap out;
  for (const auto& [key, c] : coeffs) {
    if (key.generator_part()) continue;
    const int pad = side_ == Side::left ? key.r : key.s;
    if (pad <= cutoff_) out.emplace(key, c);
  }
  return out;
}

FockVector apply_projection(const CoefficientProjection& p, const FockVector& x) {
  return p.catalog().assemble(p.mask(p.catalog().expand(x)));
}

Status bound_status(double lhs, double rhs) { return lhs <= rhs * (1 + 1e-9) ? Status::holds : Status::violated; }

Json BoundCheck::to_json() const {
  Json j;
  j["lemma"] = lemma;
  j["params"] = params;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  if (rhs_alt) j["rhs_alt"] = *rhs_alt;
  if (rhs_inflated) j["rhs_inflated"] = *rhs_inflated;
  j["margin"] = margin();
  j["status"] = std::string(to_string(status));
  return j;
}

BoundContext make_bound_context(std::shared_ptr<const RadulescuCatalog> catalog) {
  BoundContext ctx;
  const Scalar& q = catalog->config().q;
  ctx.constants = estimate_constants(q);
  ctx.riesz = empirical_riesz_constants(*catalog);
  if (ctx.constants.e <= 0.0) {
    ctx.applicable = false;
    ctx.reason = "E(q) <= 0";
  } else if (!in_norm_window(q)) {
    ctx.applicable = false;
    ctx.reason = "q outside (-1/7, 1/4)";
  } else if (!(ctx.riesz.a > 0.0)) {
    ctx.applicable = false;
    ctx.reason = "empirical lower Riesz constant not positive";
  }
  ctx.catalog = std::move(catalog);
  return ctx;
}

std::mt19937_64 seeded_rng(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 14695981039346656037ULL ^ seed;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return std::mt19937_64(h);
}

Scalar random_coefficient(std::mt19937_64& rng) {
  const std::uint64_t bits = rng();
  const long num = static_cast<long>(bits % 3) + 1;
  const long den = static_cast<long>((bits >> 8) % 3) + 1;
  return Scalar((bits >> 16) & 1 ? -num : num, den);
}

FockVector random_orthocomplement_vector(const RadulescuCatalog& catalog, int degree_cap, std::mt19937_64& rng,
                                         int terms) {
  std::vector<const CatalogEntry*> pool;
  for (int n = 1; n <= std::min(degree_cap, catalog.max_degree()); ++n) {
    for (const auto& e : catalog.entries(n)) {
      if (!e.key.generator_part()) pool.push_back(&e);
    }
  }
  FockVector x;
  if (pool.empty()) return x;
  for (int i = 0; i < terms; ++i) {
    const CatalogEntry* e = pool[rng() % pool.size()];
    x += random_coefficient(rng) * balanced(*e);
  }
  if (x.is_zero()) x = balanced(*pool[rng() % pool.size()]);
  return x;
}

FockVector random_sparse_vector(int dim, int max_degree, std::mt19937_64& rng, int terms) {
  FockVector x;
  for (int i = 0; i < terms; ++i) {
    const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    std::vector<Letter> letters;
    for (int p = 0; p < n; ++p) letters.push_back(static_cast<Letter>(rng() % static_cast<std::uint64_t>(dim)));
    x.add(Word(std::move(letters)), random_coefficient(rng));
  }
  return x;
}

std::vector<BoundCheck> modularity_bound_suite(const BoundContext& ctx, int N, int k, int t, int degree_cap,
                                               int samples, std::uint64_t seed) {
  const RadulescuCatalog& cat = *ctx.catalog;
  const SpaceConfig& cfg = cat.config();
  const std::string lemma = "right-modularity estimate";
  Json base_params = {{"N", N}, {"k", k}, {"t", t}, {"degree_cap", degree_cap}, {"q", cfg.q.str()}};
  if (!ctx.applicable) return {inapplicable(lemma, base_params, ctx.reason)};
  degree_cap = std::min(degree_cap, cfg.max_degree);
  if (t < 1 || t > degree_cap || cat.tk(t).size() == 0) return {inapplicable(lemma, base_params, "T^t is empty")};
  std::vector<std::pair<int, int>> support;
  for (int r = N + 1; r + t <= degree_cap; ++r) {
    for (int s = 0; r + s + t <= degree_cap; ++s) support.emplace_back(r, s);
  }
  if (support.empty()) return {inapplicable(lemma, base_params, "no admissible support within degree_cap")};

  const double q = cfg.q.to_double();
  const auto& c = ctx.constants;
  const double common = 4.0 * k * ctx.riesz.b * std::pow(c.c_abs, 3) * std::pow(c.d, 6) / std::pow(1 - q, k);
  const double denom_stmt = 1 - std::pow(q, 2 * t);
  const double denom_proof = 1 - q * q;
  const CoefficientProjection left(N, Side::left, ctx.catalog);
  const TkBasis& tk = cat.tk(t);

  std::vector<BoundCheck> out;
  for (int sample = 0; sample < samples; ++sample) {
    auto rng = seeded_rng(seed, "modularity/" + cfg.q.str() + "/" + std::to_string(N) + "/" + std::to_string(k) +
                                    "/" + std::to_string(t) + "/" + std::to_string(sample));
    const int gen = static_cast<int>(static_cast<std::size_t>(sample) % tk.size());
    std::map<std::pair<int, int>, Scalar> lambda;
    if (sample == 0) {
      lambda[{N + 1, 0}] = Scalar(1);  // single spike
    } else {
      for (const auto& rs : support) {
        if (rng() % 2) lambda[rs] = random_coefficient(rng);
      }
      if (lambda.empty()) lambda[support[rng() % support.size()]] = random_coefficient(rng);
    }
    FockVector x;
    double weighted = 0.0;
    for (const auto& [rs, l] : lambda) {
      const CatalogEntry& e = cat.at(CatalogKey{t, gen, rs.first, rs.second});
      x += l * e.vector;
      const long expo = 2L * (t + rs.second + rs.first - k - N - 1);
      weighted += power_or_inf(q, expo) * l.to_double() * l.to_double() * e.norm_sq.to_double();
    }
    FockVector y = x;
    for (int i = 0; i < k; ++i) y = apply_annihilation(Side::right, kE, y, cfg.q);
    BoundCheck b;
    b.lemma = lemma;
    b.params = base_params;
    b.params["generator"] = gen;
    b.params["sample"] = sample;
    b.params["support"] = lambda.size();
    b.lhs = norm_sq_double(cat.space(), apply_projection(left, y));
    // 0 * inf only arises for k = 0, where the estimate is 0 by its prefactor
    b.rhs = k == 0 ? 0.0 : common / denom_stmt * weighted;
    b.rhs_alt = k == 0 ? 0.0 : common / denom_proof * weighted;
    finish(b);
    if (b.status == Status::violated) b.rhs_inflated = b.rhs * 2.0;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<BoundCheck> decay_bound_suite(const BoundContext& ctx, int N1, int N2, int n, int degree_cap,
                                          int samples, std::uint64_t seed) {
  const RadulescuCatalog& cat = *ctx.catalog;
  const SpaceConfig& cfg = cat.config();
  const std::string lemma = "decay of s(e^n) between cutoffs";
  Json base_params = {{"N1", N1}, {"N2", N2}, {"n", n}, {"degree_cap", degree_cap}, {"q", cfg.q.str()}};
  if (!ctx.applicable) return {inapplicable(lemma, base_params, ctx.reason)};
  if (n + degree_cap > cfg.max_degree) throw CapacityError("decay suite needs n + degree_cap <= max_degree");

  const double q = cfg.q.to_double();
  const double aq = std::abs(q);
  const auto& c = ctx.constants;
  const double g = 2.0 * std::sqrt(ctx.riesz.b) * std::pow(c.c_abs, 2.5) * std::pow(c.d, 4) /
                   (std::pow(1 - q, n / 2.0) * std::sqrt(1 - q * q) * std::sqrt(ctx.riesz.a));
  const double scale = g * std::pow(n + 1.0, 1.5) * power_or_inf(aq, n - N1 - N2);
  const GradedOperator s_en = wick_operator(Word::repeat(kE, n), cfg);
  const CoefficientProjection p1(N1, Side::left, ctx.catalog);
  const CoefficientProjection p2(N2, Side::left, ctx.catalog);

  std::vector<BoundCheck> out;
  for (int sample = 0; sample < samples; ++sample) {
    auto rng = seeded_rng(seed, "decay/" + cfg.q.str() + "/" + std::to_string(N1) + "/" + std::to_string(N2) + "/" +
                                    std::to_string(n) + "/" + std::to_string(sample));
    const FockVector x = random_orthocomplement_vector(cat, degree_cap, rng);
    const FockVector z = apply_projection(p1, s_en.apply(apply_projection(p2, x)));
    BoundCheck b;
    b.lemma = lemma;
    b.params = base_params;
    b.params["sample"] = sample;
    b.lhs = std::sqrt(norm_sq_double(cat.space(), z));
    const double xnorm = std::sqrt(norm_sq_double(cat.space(), x));
    b.rhs = std::isinf(scale) ? kInf : scale * xnorm;
    b.params["G"] = g;
    finish(b);
    if (b.status == Status::violated) b.rhs_inflated = b.rhs * 2.0;
    out.push_back(std::move(b));
  }
  return out;
}

Report commutation_identity_5_1(const FockVector& x, Letter j, int N, const SpaceConfig& cfg) {
  Report r;
  r.title = "a(e_j) x_{N,N} = q^N (a(e_j) x)_{N,N}";
  r.params = {{"j", j}, {"N", N}, {"q", cfg.q.str()}, {"terms", x.size()}};
  if (j == kE) throw DomainError("the letter j must differ from e");
  if (x.max_degree() + 2 * N > cfg.max_degree) throw CapacityError("x_{N,N} exceeds max_degree");
  const FockVector lhs = apply_annihilation(Side::left, j, double_pad(x, N), cfg.q);
  const FockVector rhs = scalar_pow_q(cfg.q, N) * double_pad(apply_annihilation(Side::left, j, x, cfg.q), N);
  r.checked = 1;
  if (lhs != rhs) r.fail_with({{"x", x.to_json()}, {"lhs", lhs.to_json()}, {"rhs", rhs.to_json()}});
  return r;
}

double annihilator_norm(const FockSpace& space, Letter j) {
  const SpaceConfig& cfg = space.config();
  const GradedOperator a = annihilation(Side::left, j, cfg);
  double best = 0.0;
  for (int n = 1; n <= cfg.max_degree; ++n) {
    const SparseBlock* b = a.block(-1, n);
    if (!b) continue;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(b->rows()), static_cast<Eigen::Index>(b->cols()));
    for (std::uint64_t col = 0; col < b->cols(); ++col) {
      for (const auto& e : b->column(col)) {
        m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(col)) = e.value.to_double();
      }
    }
    const Eigen::LLT<Eigen::MatrixXd> lo(*space.gram_double(n - 1));
    const Eigen::LLT<Eigen::MatrixXd> hi(*space.gram_double(n));
    // ‖A‖_q = ‖L_{n-1}^T A L_n^{-T}‖_2 with G = L L^T
    const Eigen::MatrixXd right = hi.matrixU().solve<Eigen::OnTheRight>(m);  // m * U^{-1}, U = L^T
    const Eigen::MatrixXd t = lo.matrixU() * right;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(t);
    best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

std::vector<BoundCheck> smallness_bound_5_2(const BoundContext& ctx, int N, int degree_cap, int samples,
                                            std::uint64_t seed, Letter j) {
  const RadulescuCatalog& cat = *ctx.catalog;
  const SpaceConfig& cfg = cat.config();
  const std::string lemma = "smallness of a(e_j) x_{N,N}";
  Json base_params = {{"N", N}, {"j", j}, {"degree_cap", degree_cap}, {"q", cfg.q.str()}};
  if (cfg.dim < 2) return {inapplicable(lemma, base_params, "needs dim >= 2")};
  if (!ctx.applicable) return {inapplicable(lemma, base_params, ctx.reason)};
  if (degree_cap + 2 * N > cfg.max_degree) throw CapacityError("smallness suite needs degree_cap + 2N <= max_degree");

  const double q = cfg.q.to_double();
  const auto& c = ctx.constants;
  const double anorm = annihilator_norm(cat.space(), j);
  const double prefactor = 16.0 * ctx.riesz.b * ctx.riesz.b / (ctx.riesz.a * ctx.riesz.a) * c.d * c.c_abs *
                           power_or_inf(q * q, N);
  std::vector<BoundCheck> out;
  for (int sample = 0; sample < samples; ++sample) {
    auto rng = seeded_rng(seed, "smallness/" + cfg.q.str() + "/" + std::to_string(N) + "/" + std::to_string(sample));
    const FockVector x = random_orthocomplement_vector(cat, degree_cap, rng);
    const FockVector xnn = double_pad(x, N);
    BoundCheck b;
    b.lemma = lemma;
    b.params = base_params;
    b.params["sample"] = sample;
    b.params["operator_norm"] = anorm;
    b.lhs = norm_sq_double(cat.space(), apply_annihilation(Side::left, j, xnn, cfg.q));
    const double xnn_sq = norm_sq_double(cat.space(), xnn);
    b.rhs = prefactor * anorm * xnn_sq;
    b.rhs_alt = prefactor * anorm * anorm * xnn_sq;
    finish(b);
    if (b.status == Status::violated) {
      b.rhs_inflated = 16.0 * std::pow(2 * ctx.riesz.b, 2) / std::pow(ctx.riesz.a / 2, 2) * c.d * c.c_abs *
                       power_or_inf(q * q, N) * anorm * xnn_sq;
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace qfock
