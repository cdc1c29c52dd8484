// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero iff any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qfock/catalog.hpp"
#include "qfock/fock_checks.hpp"
#include "qfock/q_combinatorics.hpp"
#include "qfock/riesz.hpp"
#include "qfock/runner.hpp"
#include "qfock/wick.hpp"
#include "qfock/xi.hpp"

using namespace qfock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
  void require(const Report& r, const std::string& what) {
    require(r.passed() && r.status != Status::inapplicable && r.status != Status::skipped,
            what + ": " + std::string(to_string(r.status)) + " " + r.counterexamples.dump().substr(0, 200));
  }
};

std::vector<Scalar> parse_all(std::initializer_list<const char*> qs) {
  std::vector<Scalar> out;
  for (const char* q : qs) out.push_back(Scalar::parse(q));
  return out;
}

std::shared_ptr<const RadulescuCatalog> catalog_at(const Scalar& q, int L) {
  return RadulescuCatalog::build(std::make_shared<const FockSpace>(SpaceConfig{2, L, q}));
}

const std::vector<Scalar> kCoreGrid = parse_all({"0", "1/20", "-1/20", "1/10", "-1/10", "1/7", "-1/7"});

Outcome criterion_1() {
  Outcome o;
  o.require(verify_pascal(12), "Pascal identity, n <= 12");
  o.require(verify_path_identity_range(8), "path identity, n1, n2, m <= 8");
  o.require(verify_binomial_table(12), "binomial table against path sums");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  for (const auto& q : kCoreGrid) {
    const FockSpace space(SpaceConfig{2, 6, q});
    o.require(verify_inner_oracles(space, 6), "inner oracles at q = " + q.str());
  }
  return o;
}

Outcome criterion_3() {
  Outcome o;
  for (const auto& q : kCoreGrid) {
    const SpaceConfig cfg{2, 6, q};
    o.require(verify_q_commutation(Side::left, cfg), "left q-commutation at " + q.str());
    o.require(verify_q_commutation(Side::right, cfg), "right q-commutation at " + q.str());
    o.require(verify_wzw_relations(cfg), "XYZW relations at " + q.str());
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        SpaceConfig wide = cfg;
        wide.max_degree = std::max(6, m + n + 2);
        o.require(verify_xy_expansion(m, n, wide), "XY expansion m=" + std::to_string(m) + " n=" + std::to_string(n));
        o.require(verify_xz_expansion(m, n, wide), "XZ expansion m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
    for (int len = 0; len <= 5; ++len) {
      for (const auto& w : all_words(len, 2)) o.require(wick_vacuum_check(w, cfg), "vacuum check " + w.str());
    }
  }
  return o;
}

Outcome criterion_4() {
  Outcome o;
  for (const auto& q : kCoreGrid) {
    const Report r = verify_closed_form(*catalog_at(q, 6), 3, 6);
    o.require(r, "closed form at q = " + q.str());
    o.require(r.checked > 0, "closed form checked nothing");
  }
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (const auto& q : kCoreGrid) {
    const auto cat = catalog_at(q, 8);
    for (int n = 0; n <= 8; ++n) {
      o.require(catalog_rank(*cat, n) == (std::size_t{1} << n),
                "rank at degree " + std::to_string(n) + ", q = " + q.str());
    }
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  for (const auto& q : parse_all({"0", "1/20", "-1/20", "1/10", "-1/10", "1/9", "-1/9"})) {
    const double aq = std::abs(q.to_double());
    for (int n = 1; n <= 50; ++n) {
      const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - 4.0 * ealpha_matrix(aq, n);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
      o.require(es.eigenvalues().minCoeff() > 0.0, "1 - 4E not positive, n = " + std::to_string(n) + ", q = " + q.str());
    }
    const auto cat = catalog_at(q, 8);
    for (int n = 1; n <= 8; ++n) {
      const RieszReport r = riesz_analysis(n, *cat);
      o.require(r.empirical_lower > 0.0, "empirical lower bound at degree " + std::to_string(n) + ", q = " + q.str());
      if (q.is_zero()) o.require(r.identity_deviation <= 1e-12, "Gram differs from identity at q = 0");
    }
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (const auto& q : parse_all({"1/10", "-1/10", "1/20", "-1/20", "1/8"})) {
    const auto cat = catalog_at(q, 8);
    o.require(verify_norm_corollary(*cat, 8), "norm window at q = " + q.str());
    // float restatement with the stated relative tolerance
    for (int n = 1; n <= 8; ++n) {
      for (const auto& e : cat->entries(n)) {
        if (e.key.k == 0) continue;
        const double ratio = (e.norm_sq / cat->tk(e.key.k).norm_sq[static_cast<std::size_t>(e.key.gen)]).to_double();
        const double f = q_factorial(e.key.r + e.key.s).eval(q.to_double());
        o.require(ratio >= 0.5 * f * (1 - 1e-9) && ratio <= 2 * f * (1 + 1e-9), "float norm window at q = " + q.str());
      }
    }
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  for (double a : {0.1, -0.1, 1.0 / 9, -1.0 / 9, 1.0 / 3, -1.0 / 3}) {
    for (int n = 1; n <= 200; ++n) {
      const EAlphaNorm e = ealpha_norm(a, n);
      o.require(e.norm <= 2 * std::abs(a) / (1 - std::abs(a)) + 1e-12,
                "E_alpha norm, alpha = " + std::to_string(a) + ", n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  RunConfig c;
  c.dim = 2;
  c.max_degree = 8;
  c.q_list = parse_all({"0", "1/20", "-1/20", "1/10", "-1/10"});
  c.suites = {"bounds.modularity", "bounds.decay", "bounds.section5"};
  const RunResult r = run_suites(c);
  std::size_t bound_checks = 0;
  std::size_t identity_samples = 0;
  for (const auto& s : r.suites) {
    for (const auto& check : s.checks) {
      const std::string status = check["status"];
      if (check.contains("lhs")) {
        ++bound_checks;
        o.require(status == "holds", s.name + " at q = " + s.q.str() + ": " + check.dump().substr(0, 240));
      } else {
        identity_samples += check.value("checked", 0u);
        o.require(status == "pass", s.name + " at q = " + s.q.str() + ": " + check.dump().substr(0, 240));
      }
    }
  }
  // per q: 18 x 50 modularity, 20 x 50 decay, 3 x 50 smallness
  o.require(bound_checks == c.q_list.size() * (900 + 1000 + 150), "unexpected number of bound checks");
  o.require(identity_samples == c.q_list.size() * 200, "identity sample count");
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "qfock_acceptance_determinism";
  std::filesystem::create_directories(dir);
  RunConfig c;
  c.dim = 2;
  c.max_degree = 8;
  c.q_list = parse_all({"1/10", "-1/10"});
  c.suites = {"identities.*", "riesz", "bounds.section5"};
  c.seed = 42;
  auto read = [](const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  std::ostringstream sink;
  for (ReportFormat fmt : {ReportFormat::json, ReportFormat::csv}) {
    c.format = fmt;
    std::string first;
    for (int run_index = 0; run_index < 2; ++run_index) {
      c.output = dir / ("report_" + std::to_string(run_index) + (fmt == ReportFormat::json ? ".json" : ".csv"));
      o.require(run(c, sink, sink) == 0, "run exited nonzero");
      const std::string text = read(*c.output);
      o.require(!text.empty(), "empty report");
      if (run_index == 0) {
        first = text;
      } else {
        o.require(text == first, "reports differ between identical runs");
      }
    }
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no stated limit
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "q-combinatorics identities exact, n <= 12 and n1, n2, m <= 8", 10, criterion_1},
      {2, "permutation-sum and recursive inner products agree, degrees <= 6", 60, criterion_2},
      {3, "operator identities exact on the safe window, L = 6", 120, criterion_3},
      {4, "closed form of padded inner products, k <= 3, degree <= 6", 0, criterion_4},
      {5, "catalog rank 2^n for every degree <= 8", 0, criterion_5},
      {6, "Riesz positivity for |q| <= 1/9; identity Gram at q = 0", 0, criterion_6},
      {7, "norm window of padded vectors, degrees <= 8", 0, criterion_7},
      {8, "E_alpha norm bound, n <= 200", 0, criterion_8},
      {9, "bound suites hold on q in {0, +-1/20, +-1/10}; identity on 200 samples", 300, criterion_9},
      {10, "identical configurations give byte-identical reports", 0, criterion_10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "runtime " + std::to_string(secs) + " s above " + std::to_string(c.limit_seconds) + " s";
    }
    std::printf("%s criterion %d: %s (%.1f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.ok ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
