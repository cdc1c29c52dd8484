#include "qfock/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <Eigen/Eigenvalues>

#include "qfock/bounds.hpp"
#include "qfock/catalog.hpp"
#include "qfock/errors.hpp"
#include "qfock/fock_checks.hpp"
#include "qfock/q_combinatorics.hpp"
#include "qfock/riesz.hpp"
#include "qfock/tk_cache.hpp"
#include "qfock/wick.hpp"
#include "qfock/xi.hpp"

namespace qfock {

namespace {

constexpr int kOperatorDegree = 6;
constexpr int kBoundSamples = 50;
constexpr int kIdentitySamples = 200;
constexpr int kHeuristicSizes = 50;

// Lazily built objects shared by every suite at one q.
class QContext {
 public:
  QContext(SpaceConfig cfg, const TkCache* cache) : cfg_(std::move(cfg)), cache_(cache) {}

  [[nodiscard]] const SpaceConfig& config() const { return cfg_; }

  std::shared_ptr<const FockSpace> space() {
    std::call_once(space_once_, [&] { space_ = std::make_shared<const FockSpace>(cfg_); });
    return space_;
  }

  std::shared_ptr<const RadulescuCatalog> catalog() {
    std::call_once(catalog_once_, [&] { catalog_ = RadulescuCatalog::build(space(), cache_); });
    return catalog_;
  }

  const BoundContext& bounds() {
    std::call_once(bounds_once_, [&] { bounds_ = make_bound_context(catalog()); });
    return bounds_;
  }

 private:
  SpaceConfig cfg_;
  const TkCache* cache_;
  std::once_flag space_once_;
  std::once_flag catalog_once_;
  std::once_flag bounds_once_;
  std::shared_ptr<const FockSpace> space_;
  std::shared_ptr<const RadulescuCatalog> catalog_;
  BoundContext bounds_;
};

struct Sink {
  Json checks = Json::array();

  void add(const Report& r) { checks.push_back(r.to_json()); }
  void add(const BoundCheck& b) { checks.push_back(b.to_json()); }
  void add(const std::vector<BoundCheck>& bs) {
    for (const auto& b : bs) add(b);
  }
  void add(Json j) { checks.push_back(std::move(j)); }
};

using SuiteFn = std::function<void(QContext&, const RunConfig&, Sink&)>;

Report combined(std::string title, Json params) {
  Report r;
  r.title = std::move(title);
  r.params = std::move(params);
  return r;
}

void suite_qcombinatorics(QContext& ctx, const RunConfig&, Sink& out) {
  out.add(verify_pascal(12));
  out.add(verify_path_identity_range(8));
  out.add(verify_binomial_table(12));
  out.add(verify_binomial_bound(12, ctx.config().q));
}

void suite_operators(QContext& ctx, const RunConfig&, Sink& out) {
  SpaceConfig cfg = ctx.config();
  cfg.max_degree = std::min(cfg.max_degree, kOperatorDegree);
  const FockSpace space(cfg);
  out.add(verify_inner_oracles(space, kOperatorDegree));
  out.add(verify_adjoints(space));
  out.add(verify_q_commutation(Side::left, cfg));
  out.add(verify_q_commutation(Side::right, cfg));
  out.add(verify_left_right_commute(cfg));
  out.add(verify_power_norms(space));
  out.add(verify_gram_positive(space, cfg.max_degree, 0.0));
  out.add(verify_wzw_relations(cfg));
  Report xy = combined("X^m Y^n normal ordering, m, n <= 4", {{"q", cfg.q.str()}});
  Report xz = combined("X^m Z^n normal ordering, m, n <= 4", {{"q", cfg.q.str()}});
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      SpaceConfig wide = cfg;
      wide.max_degree = m + n + 2;
      absorb(xy, verify_xy_expansion(m, n, wide));
      absorb(xz, verify_xz_expansion(m, n, wide));
    }
  }
  out.add(xy);
  out.add(xz);
}

std::vector<Word> words_up_to(int max_len, int dim) {
  std::vector<Word> out;
  for (int n = 0; n <= max_len; ++n) {
    for (auto& w : all_words(n, dim)) out.push_back(std::move(w));
  }
  return out;
}

void suite_wick(QContext& ctx, const RunConfig&, Sink& out) {
  SpaceConfig cfg = ctx.config();
  cfg.max_degree = std::min(cfg.max_degree, kOperatorDegree);
  Report vacuum = combined("Wick operator on the vacuum, |w| <= 5", {{"q", cfg.q.str()}});
  for (const auto& w : words_up_to(std::min(5, cfg.max_degree), cfg.dim)) absorb(vacuum, wick_vacuum_check(w, cfg));
  out.add(vacuum);
  Report rec = combined("Wick expansion against the recursion, |w| <= 4", {{"q", cfg.q.str()}});
  Report right = combined("Wick operator commutes with s_r, |w| <= 4", {{"q", cfg.q.str()}});
  for (const auto& w : words_up_to(std::min(4, cfg.max_degree), cfg.dim)) {
    absorb(rec, verify_wick_recursion(w, cfg));
    for (int i = 0; i < cfg.dim; ++i) absorb(right, verify_wick_right_commutation(w, static_cast<Letter>(i), cfg));
  }
  out.add(rec);
  out.add(right);
}

void suite_radulescu(QContext& ctx, const RunConfig&, Sink& out) {
  const auto cat = ctx.catalog();
  const SpaceConfig& cfg = cat->config();
  const int L = cfg.max_degree;
  for (int k = 0; k <= L; ++k) out.add(verify_tk(cat->tk(k), cat->space()));

  Report action = combined("annihilators on padded generators", {{"q", cfg.q.str()}, {"max_k", 3}});
  Report powers = combined("powers of annihilators on padded generators", {{"q", cfg.q.str()}, {"max_k", 3}});
  for (int k = 1; k <= std::min(3, L); ++k) {
    for (const auto& g : cat->tk(k).generators) {
      for (int r = 0; r + k <= L; ++r) {
        for (int s = 0; r + s + k <= L; ++s) {
          absorb(action, verify_annihilator_action(g, k, r, s, cfg));
          for (int p = 2; p <= 3; ++p) absorb(powers, verify_annihilator_power(g, k, r, s, p, cfg));
        }
      }
    }
  }
  out.add(action);
  out.add(powers);
  out.add(verify_closed_form(*cat, 3, std::min(6, L)));
  out.add(verify_orthogonality(*cat, L));
  out.add(verify_inclusion_relations(*cat, std::min(2, L)));
  out.add(verify_norm_corollary(*cat, L));
  out.add(verify_inner_estimates(*cat, L));

  Report rank = combined("catalog completeness", {{"q", cfg.q.str()}, {"dim", cfg.dim}, {"max_degree", L}});
  for (int n = 0; n <= L; ++n) {
    ++rank.checked;
    const std::size_t got = catalog_rank(*cat, n);
    if (got != cfg.block_size(n)) {
      rank.fail_with({{"degree", n}, {"rank", got}, {"expected", cfg.block_size(n)}});
    }
  }
  out.add(rank);
}

void suite_riesz(QContext& ctx, const RunConfig&, Sink& out) {
  const auto cat = ctx.catalog();
  const SpaceConfig& cfg = cat->config();
  const double q = cfg.q.to_double();
  for (int n = 1; n <= cfg.max_degree; ++n) {
    const RieszReport rep = riesz_analysis(n, *cat);
    Json j;
    j["lemma"] = "Riesz analysis";
    j["params"] = {{"degree", n}, {"q", cfg.q.str()}};
    j["report"] = rep.to_json();
    bool ok = rep.complete() && rep.empirical_lower > 0.0;
    if (cfg.q.is_zero()) ok = ok && rep.identity_deviation <= 1e-12;
    j["status"] = ok ? "pass" : "fail";
    out.add(std::move(j));
  }

  Report ealpha = combined("E_alpha norm bound", {{"alpha", q}, {"max_n", kHeuristicSizes}});
  for (int n = 1; n <= kHeuristicSizes; ++n) {
    const EAlphaNorm e = ealpha_norm(q, n);
    ++ealpha.checked;
    if (!(e.norm <= e.bound + 1e-12)) ealpha.fail_with({{"n", n}, {"norm", e.norm}, {"bound", e.bound}});
  }
  out.add(ealpha);

  // 1 - 4E_{|q|} is asserted positive only for |q| < 1/9
  double worst = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= kHeuristicSizes; ++n) {
    const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - 4.0 * ealpha_matrix(std::abs(q), n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    worst = std::min(worst, es.eigenvalues().minCoeff());
  }
  Report heur = combined("1 - 4E_{|q|} positive", {{"q", cfg.q.str()}, {"max_n", kHeuristicSizes}});
  heur.window = {{"min_eigenvalue", worst}};
  heur.checked = kHeuristicSizes;
  if (cfg.q.abs() * Scalar(9) >= Scalar(1)) {
    heur.status = Status::inapplicable;
  } else if (!(worst > 0.0)) {
    heur.fail_with({{"min_eigenvalue", worst}});
  }
  out.add(heur);
}

void suite_modularity(QContext& ctx, const RunConfig& rc, Sink& out) {
  const BoundContext& b = ctx.bounds();
  for (int t = 1; t <= 2; ++t) {
    for (int N = 0; N <= 2; ++N) {
      for (int k = 0; k <= 2; ++k) {
        out.add(modularity_bound_suite(b, N, k, t, ctx.config().max_degree, kBoundSamples, rc.seed));
      }
    }
  }
}

void suite_decay(QContext& ctx, const RunConfig& rc, Sink& out) {
  const BoundContext& b = ctx.bounds();
  const int L = ctx.config().max_degree;
  for (int n = 0; n <= std::min(4, L); ++n) {
    for (int n1 = 0; n1 <= 1; ++n1) {
      for (int n2 = 0; n2 <= 1; ++n2) out.add(decay_bound_suite(b, n1, n2, n, L - n, kBoundSamples, rc.seed));
    }
  }
}

void suite_padded_annihilator(QContext& ctx, const RunConfig& rc, Sink& out) {
  const SpaceConfig& cfg = ctx.config();
  const int L = cfg.max_degree;
  if (cfg.dim < 2) {
    Report r = combined("padded annihilator suites", {{"dim", cfg.dim}});
    r.status = Status::inapplicable;
    out.add(r);
    return;
  }
  Report ident = combined("a(e_j) x_{N,N} = q^N (a(e_j) x)_{N,N}, seeded samples",
                          {{"q", cfg.q.str()}, {"samples", kIdentitySamples}, {"max_N", 2}});
  for (int sample = 0; sample < kIdentitySamples; ++sample) {
    auto rng = seeded_rng(rc.seed, "identity/" + cfg.q.str() + "/" + std::to_string(sample));
    const int N = std::min(sample % 3, L / 2);
    const auto j = static_cast<Letter>(1 + rng() % static_cast<std::uint64_t>(cfg.dim - 1));
    absorb(ident, commutation_identity_5_1(random_sparse_vector(cfg.dim, L - 2 * N, rng), j, N, cfg));
  }
  out.add(ident);
  const BoundContext& b = ctx.bounds();
  for (int N = 0; N <= std::min(2, L / 2); ++N) out.add(smallness_bound_5_2(b, N, L - 2 * N, kBoundSamples, rc.seed));
}

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"identities.qcombinatorics", suite_qcombinatorics},
      {"identities.operators", suite_operators},
      {"identities.wick", suite_wick},
      {"identities.radulescu", suite_radulescu},
      {"riesz", suite_riesz},
      {"bounds.modularity", suite_modularity},
      {"bounds.decay", suite_decay},
      {"bounds.section5", suite_padded_annihilator},
  };
  return r;
}

Status aggregate(const Json& checks, std::size_t& inapplicable) {
  Status s = Status::pass;
  inapplicable = 0;
  for (const auto& c : checks) {
    const Status cs = status_from_string(c.at("status").get<std::string>());
    if (cs == Status::inapplicable) ++inapplicable;
    if (is_failure(cs)) s = Status::fail;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(const Json& j) {
  if (!j.is_number()) return j.is_null() ? "inf" : "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  if (q_list.empty()) throw ConfigError("the q grid is empty");
  for (const auto& q : q_list) {
    SpaceConfig cfg{dim, max_degree, q};
    cfg.validate();
  }
  if (suites.empty()) throw ConfigError("no suites selected");
  (void)resolve_suites(suites);
}

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) return text.empty();
  if (pattern.front() == '*') {
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (glob_match(pattern.substr(1), text.substr(i))) return true;
    }
    return false;
  }
  return !text.empty() && (pattern.front() == '?' || pattern.front() == text.front()) &&
         glob_match(pattern.substr(1), text.substr(1));
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& patterns) {
  std::vector<bool> take(registered_suites().size(), false);
  for (const auto& p : patterns) {
    bool any = false;
    for (std::size_t i = 0; i < registered_suites().size(); ++i) {
      const std::string& name = registered_suites()[i];
      if (glob_match(p, name) || name.rfind(p + ".", 0) == 0) take[i] = any = true;
    }
    if (!any) throw ConfigError("no registered suite matches '" + p + "'");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < take.size(); ++i) {
    if (take[i]) out.push_back(registered_suites()[i]);
  }
  return out;
}

Json SuiteResult::to_json() const {
  return {{"name", name}, {"q", q.str()}, {"status", std::string(to_string(status))}, {"checks", checks}};
}

int RunResult::exit_code() const {
  for (const auto& s : suites) {
    if (is_failure(s.status)) return 1;
  }
  return 0;
}

std::size_t RunResult::inapplicable() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.inapplicable;
  return n;
}

Json RunResult::to_json() const {
  Json j;
  j["version"] = kReportVersion;
  j["config"] = config;
  j["suites"] = Json::array();
  for (const auto& s : suites) j["suites"].push_back(s.to_json());
  return j;
}

std::string RunResult::to_csv() const {
  std::ostringstream os;
  os << "suite,q,lemma,params,lhs,rhs,margin,status\n";
  for (const auto& s : suites) {
    for (const auto& c : s.checks) {
      const std::string lemma = c.contains("lemma") ? c["lemma"].get<std::string>() : c.value("identity", "");
      const Json params = c.contains("params") ? c["params"] : c.value("ranges", Json::object());
      os << csv_field(s.name) << ',' << csv_field(s.q.str()) << ',' << csv_field(lemma) << ','
         << csv_field(params.dump()) << ',';
      if (c.contains("lhs")) {
        os << csv_number(c["lhs"]) << ',' << csv_number(c["rhs"]) << ',' << csv_number(c["margin"]);
      } else {
        os << ",,";
      }
      os << ',' << c["status"].get<std::string>() << '\n';
    }
  }
  return os.str();
}

RunResult run_suites(const RunConfig& config) {
  config.validate();
  const std::vector<std::string> names = resolve_suites(config.suites);

  std::unique_ptr<TkCache> cache;
  if (auto dir = TkCache::resolve_dir(config.cache_dir ? std::optional<std::string>(config.cache_dir->string())
                                                       : std::nullopt)) {
    cache = std::make_unique<TkCache>(*dir);
  }
  std::vector<std::unique_ptr<QContext>> contexts;
  for (const auto& q : config.q_list) {
    contexts.push_back(std::make_unique<QContext>(SpaceConfig{config.dim, config.max_degree, q}, cache.get()));
  }

  RunResult result;
  result.config = {{"dim", config.dim}, {"max_degree", config.max_degree}, {"q", Json::array()},
                   {"suites", names}, {"seed", config.seed}};
  for (const auto& q : config.q_list) result.config["q"].push_back(q.str());

  std::map<std::string, SuiteFn> fns(registry().begin(), registry().end());
  struct Task {
    std::string suite;
    std::size_t q_index;
  };
  std::vector<Task> tasks;
  for (const auto& n : names) {
    for (std::size_t i = 0; i < config.q_list.size(); ++i) tasks.push_back({n, i});
  }
  result.suites.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      SuiteResult& sr = result.suites[t];
      sr.name = task.suite;
      sr.q = config.q_list[task.q_index];
      Sink sink;
      try {
        fns.at(task.suite)(*contexts[task.q_index], config, sink);
      } catch (const std::exception& e) {
        sink.add(Json{{"lemma", "suite error"}, {"params", Json{{"error", e.what()}}}, {"status", "fail"}});
      }
      sr.checks = std::move(sink.checks);
      sr.status = aggregate(sr.checks, sr.inapplicable);
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return result;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const RunResult result = run_suites(config);
  const std::string text = config.format == ReportFormat::json ? result.to_json().dump(2) + "\n" : result.to_csv();
  if (config.output) {
    const auto tmp = config.output->string() + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary);
      if (!f) throw ConfigError("cannot write " + config.output->string());
      f << text;
    }
    std::filesystem::rename(tmp, *config.output);
  } else {
    out << text;
  }
  for (const auto& s : result.suites) {
    if (s.inapplicable) log << "warning: " << s.name << " at q = " << s.q.str() << ": " << s.inapplicable
                            << " check(s) inapplicable\n";
    if (is_failure(s.status)) log << "FAILED: " << s.name << " at q = " << s.q.str() << "\n";
  }
  return result.exit_code();
}

Json cache_warm(const RunConfig& config) {
  if (config.q_list.empty()) throw ConfigError("the q grid is empty");
  const auto dir = TkCache::resolve_dir(config.cache_dir ? std::optional<std::string>(config.cache_dir->string())
                                                         : std::nullopt);
  if (!dir) throw ConfigError("no cache directory: pass --cache-dir or set QFOCK_CACHE_DIR");
  const TkCache cache(*dir);
  Json entries = Json::array();
  for (const auto& q : config.q_list) {
    const SpaceConfig cfg{config.dim, config.max_degree, q};
    cfg.validate();
    const FockSpace space(cfg);
    for (int k = 0; k <= cfg.max_degree; ++k) {
      const CachedBasis cb = cache.get(k, space);
      const char* origin = cb.origin == CacheOrigin::loaded ? "loaded"
                           : cb.origin == CacheOrigin::computed ? "computed" : "repaired";
      entries.push_back({{"q", q.str()}, {"k", k}, {"generators", cb.basis.size()}, {"origin", origin},
                         {"file", cache.entry_path(cfg, k).filename().string()}});
    }
  }
  return {{"dir", dir->string()}, {"entries", entries}};
}

}  // namespace qfock
