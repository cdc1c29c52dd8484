#pragma once

/**
 * @file check.hpp
 * @brief Verification report records shared by every identity and bound suite.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qfock {

using Json = nlohmann::ordered_json;

enum class Status {
  pass,
  fail,
  holds,
  violated,
  inapplicable,
  skipped,
};

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// true for fail/violated; these are the only statuses that fail a run.
bool is_failure(Status s);

/// Outcome of one exact identity verification.
///
/// `title_key` / `params_key` select the JSON keys ("identity"/"ranges" for
/// combinatorial identities, "lemma"/"params" for operator lemmas).
struct Report {
  std::string title;
  std::string title_key = "lemma";
  std::string params_key = "params";
  Json params = Json::object();
  Json window = nullptr;
  Status status = Status::pass;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  Json counterexamples = Json::array();

  /// Records a counterexample and flips the status to fail.
  void fail_with(Json counterexample);

  [[nodiscard]] bool passed() const { return !is_failure(status); }
  [[nodiscard]] Json to_json() const;
};

/// Combine sub-reports into `into`; any failure fails the aggregate.
void absorb(Report& into, const Report& part);

}  // namespace qfock
