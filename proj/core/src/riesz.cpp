#include "qfock/riesz.hpp"

#include <algorithm>
#include <cmath>

#include "qfock/errors.hpp"

namespace qfock {

Eigen::MatrixXd ealpha_matrix(double alpha, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) m(i, j) = -std::pow(alpha, std::abs(i - j));
    }
  }
  return m;
}

EAlphaNorm ealpha_norm(double alpha, int n) {
  if (!(std::abs(alpha) < 1.0) || n < 1) throw DomainError("ealpha_norm needs |alpha| < 1 and n >= 1");
  EAlphaNorm out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ealpha_matrix(alpha, n), Eigen::EigenvaluesOnly);
  out.norm = es.eigenvalues().cwiseAbs().maxCoeff();
  out.bound = 2 * std::abs(alpha) / (1 - std::abs(alpha));
  out.holds = out.norm <= out.bound + 1e-12;
  return out;
}

Json RieszReport::to_json() const {
  return {{"degree", degree},
          {"vectors", vectors},
          {"empirical_lower", empirical_lower},
          {"empirical_upper", empirical_upper},
          {"heuristic_lower", heuristic_lower},
          {"heuristic_upper", heuristic_upper},
          {"heuristic_minus_min", heuristic_minus_min},
          {"identity_deviation", identity_deviation},
          {"rank", rank},
          {"expected_rank", expected_rank}};
}

RieszReport riesz_analysis(int degree, const RadulescuCatalog& catalog) {
  const SpaceConfig& cfg = catalog.config();
  if (degree < 0 || degree > cfg.max_degree) throw CapacityError("degree above catalog truncation");
  RieszReport rep;
  rep.degree = degree;
  rep.expected_rank = cfg.block_size(degree);
  rep.rank = catalog_rank(catalog, degree);

  std::vector<const CatalogEntry*> vecs;
  for (const auto& e : catalog.entries(degree)) {
    if (e.key.k >= 1) vecs.push_back(&e);
  }
  rep.vectors = vecs.size();
  if (!vecs.empty()) {
    const auto g = catalog.space().gram_double(degree);
    const auto rows = static_cast<Eigen::Index>(cfg.block_size(degree));
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(vecs.size()));
    for (std::size_t c = 0; c < vecs.size(); ++c) {
      // x / sqrt(norm_sq) via the exact ratio x^2 / norm_sq; generator
      // coefficients alone can exceed the double range at high k
      const Scalar& ns = vecs[c]->norm_sq;
      for (const auto& [w, x] : vecs[c]->vector) {
        const double mag = std::sqrt((x * x / ns).to_double());
        v(static_cast<Eigen::Index>(w.index(cfg.dim)), static_cast<Eigen::Index>(c)) = x.sign() < 0 ? -mag : mag;
      }
    }
    const Eigen::MatrixXd gram = v.transpose() * (*g) * v;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    rep.empirical_lower = es.eigenvalues().minCoeff();
    rep.empirical_upper = es.eigenvalues().maxCoeff();
    rep.identity_deviation =
        (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  }

  const double aq = std::abs(cfg.q.to_double());
  const Eigen::MatrixXd e = ealpha_matrix(aq, degree + 1);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(degree + 1, degree + 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> plus(id + 4 * e, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> minus(id - 4 * e, Eigen::EigenvaluesOnly);
  rep.heuristic_lower = plus.eigenvalues().minCoeff();
  rep.heuristic_upper = minus.eigenvalues().maxCoeff();
  rep.heuristic_minus_min = minus.eigenvalues().minCoeff();
  return rep;
}

RieszConstants empirical_riesz_constants(const RadulescuCatalog& catalog) {
  RieszConstants c;
  for (int n = 1; n <= catalog.max_degree(); ++n) {
    const RieszReport r = riesz_analysis(n, catalog);
    if (r.vectors == 0) continue;
    c.a = std::min(c.a, r.empirical_lower);
    c.b = std::max(c.b, r.empirical_upper);
  }
  return c;
}

}  // namespace qfock
