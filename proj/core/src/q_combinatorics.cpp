#include "qfock/q_combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

#include "qfock/errors.hpp"
#include "qfock/product_constant.hpp"

namespace qfock {

QPolynomial q_int(long n) {
  if (n < 0) throw DomainError("q_int: negative argument");
  return QPolynomial(std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

QPolynomial q_factorial(long n) {
  if (n < 0) throw DomainError("q_factorial: negative argument");
  QPolynomial acc = QPolynomial::constant(1);
  for (long i = 2; i <= n; ++i) acc *= q_int(i);
  return acc;
}

QPolynomial q_falling_factorial(long n, long j) {
  if (n < 0 || j < 0) throw DomainError("q_falling_factorial: negative argument");
  if (j > n) return {};
  QPolynomial acc = QPolynomial::constant(1);
  for (long i = n - j + 1; i <= n; ++i) acc *= q_int(i);
  return acc;
}

QBinomialTable::QBinomialTable(long max_n) : max_n_(max_n) {
  if (max_n < 0) throw DomainError("QBinomialTable: negative size");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  rows_[0] = {QPolynomial::constant(1)};
  for (long n = 0; n < max_n; ++n) {
    auto& next = rows_[static_cast<std::size_t>(n) + 1];
    next.resize(static_cast<std::size_t>(n) + 2);
    for (long m = 0; m <= n + 1; ++m) {
      // binom(n+1, m) = binom(n, m) + q^{n-m+1} binom(n, m-1)
      QPolynomial v = at(n, m);
      if (m >= 1) v += at(n, m - 1).shifted(static_cast<std::size_t>(n - m + 1));
      next[static_cast<std::size_t>(m)] = std::move(v);
    }
  }
}

const QPolynomial& QBinomialTable::at(long n, long m) const {
  if (n > max_n_) throw DomainError("QBinomialTable: row out of table range");
  if (n < 0 || m < 0 || m > n) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

void QBinomialTable::override_entry(long n, long m, QPolynomial value) {
  if (n < 0 || n > max_n_ || m < 0 || m > n) throw DomainError("override outside table");
  rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = std::move(value);
}

QPolynomial q_binomial(long n, long m) {
  if (n < 0 || m < 0 || m > n) return {};
  static std::mutex mu;
  static std::shared_ptr<const QBinomialTable> table;
  std::shared_ptr<const QBinomialTable> snapshot;
  {
    std::lock_guard lock(mu);
    if (!table || table->max_n() < n) {
      table = std::make_shared<const QBinomialTable>(std::max<long>(n, 2 * (table ? table->max_n() : 16)));
    }
    snapshot = table;
  }
  return snapshot->at(n, m);
}

long inversions(std::span<const int> perm) {
  const auto m = static_cast<long>(perm.size());
  std::vector<bool> seen(perm.size() + 1, false);
  for (int v : perm) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("inversions: input is not a permutation of {1..m}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  long count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++count;
    }
  }
  return count;
}

QPolynomial lattice_path_sum(long horizontal, long vertical) {
  if (horizontal < 0 || vertical < 0) return {};
  const long steps = horizontal + vertical;
  // Histogram of path weights by exponent of q.
  std::vector<mpz_class> hist(static_cast<std::size_t>(horizontal * vertical) + 1, mpz_class(0));
  // Each path is a 0/1 step string with `vertical` ones (the weighted steps).
  std::vector<int> path(static_cast<std::size_t>(steps), 0);
  std::fill(path.end() - vertical, path.end(), 1);
  do {
    long i = 0;
    long exponent = 0;
    for (int step : path) {
      if (step == 1) {
        exponent += i;
      } else {
        ++i;
      }
    }
    hist[static_cast<std::size_t>(exponent)] += 1;
  } while (std::next_permutation(path.begin(), path.end()));
  return QPolynomial(std::move(hist));
}

Report verify_pascal(long n_max, const QBinomialTable* table) {
  Report report;
  report.title = "q-binomial Pascal relation";
  report.title_key = "identity";
  report.params_key = "ranges";
  report.params = {{"n", {0, n_max}}, {"m", "[-1, n+2]"}};

  std::unique_ptr<QBinomialTable> own;
  if (!table) {
    own = std::make_unique<QBinomialTable>(n_max + 1);
    table = own.get();
  }
  if (table->max_n() < n_max + 1) throw DomainError("verify_pascal: table too small");

  const auto q_pow = [](long e) { return QPolynomial::monomial(static_cast<std::size_t>(e)); };
  for (long n = 0; n <= n_max; ++n) {
    for (long m = -1; m <= n + 2; ++m) {
      const QPolynomial& lhs = table->at(n + 1, m);
      const QPolynomial& below = table->at(n, m);
      const QPolynomial& below_left = table->at(n, m - 1);

      QPolynomial first = below_left;
      if (!below.is_zero()) first += q_pow(m) * below;  // below != 0 implies m >= 0

      QPolynomial second = below;
      if (!below_left.is_zero()) second += q_pow(n - m + 1) * below_left;  // implies m <= n+1

      report.checked += 2;
      if (first != lhs) {
        report.fail_with({{"form", "q^m binom(n,m) + binom(n,m-1)"}, {"n", n}, {"m", m},
                          {"lhs", lhs.to_json()}, {"rhs", first.to_json()}});
      }
      if (second != lhs) {
        report.fail_with({{"form", "binom(n,m) + q^(n-m+1) binom(n,m-1)"}, {"n", n}, {"m", m},
                          {"lhs", lhs.to_json()}, {"rhs", second.to_json()}});
      }
    }
  }
  return report;
}

Report verify_path_identity(long n1, long n2, long m) {
  if (n1 < 0 || n2 < 0 || m < 0 || n1 + n2 < m) {
    throw DomainError("verify_path_identity: need n1, n2, m >= 0 and n1 + n2 >= m");
  }
  Report report;
  report.title = "weighted path q-binomial relation";
  report.title_key = "identity";
  report.params_key = "ranges";
  report.params = {{"n1", n1}, {"n2", n2}, {"m", m}};

  QPolynomial sum;
  for (long i = 0; i <= m; ++i) {
    const QPolynomial left = q_binomial(n1, i);
    const QPolynomial right = q_binomial(n2, m - i);
    if (left.is_zero() || right.is_zero()) continue;  // i <= n1 from here on
    sum += QPolynomial::monomial(static_cast<std::size_t>((n1 - i) * (m - i))) * left * right;
  }
  const QPolynomial target = q_binomial(n1 + n2, m);
  const QPolynomial oracle = lattice_path_sum(n1 + n2 - m, m);
  report.checked = 2;
  if (sum != target) {
    report.fail_with({{"n1", n1}, {"n2", n2}, {"m", m}, {"sum", sum.to_json()}, {"binomial", target.to_json()}});
  }
  if (oracle != target) {
    report.fail_with({{"n1", n1}, {"n2", n2}, {"m", m}, {"paths", oracle.to_json()},
                      {"binomial", target.to_json()}});
  }
  return report;
}

Report verify_path_identity_range(long max) {
  Report report;
  report.title = "weighted path q-binomial relation";
  report.title_key = "identity";
  report.params_key = "ranges";
  report.params = {{"n1", {0, max}}, {"n2", {0, max}}, {"m", "[0, min(max, n1+n2)]"}};
  for (long n1 = 0; n1 <= max; ++n1) {
    for (long n2 = 0; n2 <= max; ++n2) {
      for (long m = 0; m <= std::min(max, n1 + n2); ++m) absorb(report, verify_path_identity(n1, n2, m));
    }
  }
  return report;
}

Report verify_binomial_table(long n_max) {
  Report report;
  report.title = "q-binomial table invariants";
  report.title_key = "identity";
  report.params_key = "ranges";
  report.params = {{"n", {0, n_max}}};
  const QBinomialTable table(n_max);
  for (long n = 0; n <= n_max; ++n) {
    for (long m = -2; m <= n + 2; ++m) {
      const QPolynomial& b = table.at(n, m);
      ++report.checked;
      if (m < 0 || m > n) {
        if (!b.is_zero()) report.fail_with({{"n", n}, {"m", m}, {"expected", "0"}});
        continue;
      }
      if ((m == 0 || m == n) && b != QPolynomial::constant(1)) report.fail_with({{"n", n}, {"m", m}, {"expected", "1"}});
      if (b != table.at(n, n - m)) report.fail_with({{"n", n}, {"m", m}, {"broken", "symmetry"}});
      if (b.degree() != m * (n - m)) report.fail_with({{"n", n}, {"m", m}, {"broken", "degree"}});
      for (const auto& c : b.coefficients()) {
        if (sgn(c) < 0) report.fail_with({{"n", n}, {"m", m}, {"broken", "nonnegativity"}});
      }
      if (b != lattice_path_sum(n - m, m)) report.fail_with({{"n", n}, {"m", m}, {"broken", "path oracle"}});
    }
  }
  return report;
}

Report verify_binomial_bound(long n_max, const Scalar& q) {
  Report report;
  report.title = "q-binomial two-sided bound";
  report.title_key = "identity";
  report.params_key = "ranges";
  report.params = {{"n", {0, n_max}}, {"q", q.str()}};
  const double bound = constant_d(q) * constant_c(q.abs());
  const double qd = q.to_double();
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= n; ++m) {
      const double v = std::abs(q_binomial(n, m).eval(qd));
      ++report.checked;
      if (v > bound * (1 + 1e-12) || 1.0 / v > bound * (1 + 1e-12)) {
        report.fail_with({{"n", n}, {"m", m}, {"value", v}, {"bound", bound}});
      }
    }
  }
  return report;
}

}  // namespace qfock
