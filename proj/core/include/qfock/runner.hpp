#pragma once

/**
 * @file runner.hpp
 * @brief Named verification suites over a grid of q values, and the report
 * formats the command-line tool writes.
 */

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qfock/check.hpp"
#include "qfock/scalar.hpp"

namespace qfock {

enum class ReportFormat { json, csv };

struct RunConfig {
  int dim = 2;
  int max_degree = 8;
  std::vector<Scalar> q_list{Scalar(0)};
  std::vector<std::string> suites;  ///< names or patterns such as "identities.*"
  std::uint64_t seed = 42;
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::filesystem::path> output;
  ReportFormat format = ReportFormat::json;
  unsigned threads = 0;  ///< 0: hardware concurrency

  /// Throws ConfigError on |q| >= 1, an empty grid, bad dimensions or a
  /// pattern that matches no registered suite.
  void validate() const;
};

inline constexpr const char* kReportVersion = "1";

/// Registered suite names in canonical order.
const std::vector<std::string>& registered_suites();

/// Expands names and patterns ("*" wildcard; a bare prefix such as
/// "identities" or "bounds" selects its dotted children) into registered
/// names, in registry order without duplicates.
std::vector<std::string> resolve_suites(const std::vector<std::string>& patterns);

bool glob_match(std::string_view pattern, std::string_view text);

struct SuiteResult {
  std::string name;
  Scalar q;
  Status status = Status::pass;
  Json checks = Json::array();
  std::size_t inapplicable = 0;

  [[nodiscard]] Json to_json() const;
};

struct RunResult {
  Json config;
  std::vector<SuiteResult> suites;

  /// 1 if any check failed or was violated, else 0.
  [[nodiscard]] int exit_code() const;
  [[nodiscard]] std::size_t inapplicable() const;
  [[nodiscard]] Json to_json() const;
  /// One row per check: suite, q, lemma, params, lhs, rhs, margin, status.
  [[nodiscard]] std::string to_csv() const;
};

/// Runs every (suite, q) pair on a worker pool; results come back in
/// (suite, q) order regardless of scheduling.
RunResult run_suites(const RunConfig& config);

/// run_suites, then writes the report to config.output (stdout if unset) and
/// prints warnings to `log`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Computes and persists T^k for every k <= max_degree and every q. Each
/// entry records whether it was loaded, computed or repaired.
Json cache_warm(const RunConfig& config);

}  // namespace qfock
