#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfock/errors.hpp"
#include "qfock/runner.hpp"

namespace {

struct Options {
  int dim = 2;
  int max_degree = 8;
  std::vector<std::string> q{"0"};
  std::vector<std::string> suites;
  std::uint64_t seed = 42;
  std::string cache_dir;
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
};

void add_space_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--dim", o.dim, "Dimension of the one-particle space")->capture_default_str();
  cmd->add_option("--max-degree", o.max_degree, "Truncation degree L")->capture_default_str();
  cmd->add_option("--q", o.q, "Deformation parameter as n/d; repeat for a grid")->capture_default_str();
  cmd->add_option("--cache-dir", o.cache_dir, "T^k cache directory (default: $QFOCK_CACHE_DIR)");
}

qfock::RunConfig to_config(const Options& o) {
  qfock::RunConfig c;
  c.dim = o.dim;
  c.max_degree = o.max_degree;
  c.q_list.clear();
  for (const auto& s : o.q) c.q_list.push_back(qfock::Scalar::parse(s));
  c.suites = o.suites;
  c.seed = o.seed;
  if (!o.cache_dir.empty()) c.cache_dir = o.cache_dir;
  if (!o.out.empty()) c.output = o.out;
  c.format = o.format == "csv" ? qfock::ReportFormat::csv : qfock::ReportFormat::json;
  c.threads = o.threads;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites on truncated q-deformed Fock spaces"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Run verification suites over a q grid");
  add_space_options(run, o);
  run->add_option("--suite", o.suites, "Suite name or pattern, e.g. identities.*")->required();
  run->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  run->add_option("--out", o.out, "Report path (default: stdout)");
  run->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  run->add_option("--threads", o.threads, "Worker threads (0: all cores)")->capture_default_str();

  auto* cache = app.add_subcommand("cache", "Manage the T^k cache");
  cache->require_subcommand(1);
  auto* warm = cache->add_subcommand("warm", "Compute and persist T^k for every k <= L and every q");
  add_space_options(warm, o);

  auto* list = app.add_subcommand("list", "List registered suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& n : qfock::registered_suites()) std::cout << n << "\n";
      return 0;
    }
    const qfock::RunConfig config = to_config(o);
    if (warm->parsed()) {
      std::cout << qfock::cache_warm(config).dump(2) << "\n";
      return 0;
    }
    return qfock::run(config, std::cout, std::cerr);
  } catch (const qfock::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qfock::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qfock::CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
