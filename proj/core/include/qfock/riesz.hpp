#pragma once

/**
 * @file riesz.hpp
 * @brief Gram-matrix analysis of the normalized padded family.
 */

#include <vector>

#include <Eigen/Dense>

#include "qfock/catalog.hpp"
#include "qfock/check.hpp"

namespace qfock {

struct EAlphaNorm {
  double norm = 0.0;
  double bound = 0.0;
  bool holds = true;
};

/// The n x n Toeplitz matrix with -alpha^{|i-j|} off the diagonal and 0 on it.
Eigen::MatrixXd ealpha_matrix(double alpha, int n);

/// Spectral norm by symmetric eigen-decomposition against 2|α|/(1-|α|).
EAlphaNorm ealpha_norm(double alpha, int n);

struct RieszReport {
  int degree = 0;
  std::size_t vectors = 0;
  double empirical_lower = 1.0;
  double empirical_upper = 1.0;
  double heuristic_lower = 1.0;  ///< min eigenvalue of 1 + 4E_{|q|}
  double heuristic_upper = 1.0;  ///< max eigenvalue of 1 - 4E_{|q|}
  double heuristic_minus_min = 1.0;  ///< min eigenvalue of 1 - 4E_{|q|}
  double identity_deviation = 0.0;  ///< max |G - I| entry
  std::size_t rank = 0;
  std::size_t expected_rank = 0;

  [[nodiscard]] bool complete() const { return rank == expected_rank; }
  [[nodiscard]] Json to_json() const;
};

/// Normalizes every ξ^i_{r,s} with k >= 1 at this degree, forms the float
/// Gram matrix and reads off its extreme eigenvalues; the heuristic matrices
/// use size degree + 1. Also records the exact rank of the whole catalog at
/// this degree (including ξ^0_{degree,0}).
RieszReport riesz_analysis(int degree, const RadulescuCatalog& catalog);

/// Extremes over degrees 1..max_degree, with the one-dimensional generator
/// part (eigenvalue 1) included.
struct RieszConstants {
  double a = 1.0;
  double b = 1.0;
};
RieszConstants empirical_riesz_constants(const RadulescuCatalog& catalog);

}  // namespace qfock
