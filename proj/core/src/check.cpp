#include "qfock/check.hpp"

#include <array>
#include <utility>

#include "qfock/errors.hpp"

namespace qfock {

namespace {
constexpr std::array<std::pair<Status, std::string_view>, 6> kNames{{
    {Status::pass, "pass"},
    {Status::fail, "fail"},
    {Status::holds, "holds"},
    {Status::violated, "violated"},
    {Status::inapplicable, "inapplicable"},
    {Status::skipped, "skipped"},
}};

// Keep report files small when an identity breaks everywhere.
constexpr std::size_t kMaxCounterexamples = 20;
}  // namespace

std::string_view to_string(Status s) {
  for (const auto& [status, name] : kNames) {
    if (status == s) return name;
  }
  return "unknown";
}

Status status_from_string(std::string_view s) {
  for (const auto& [status, name] : kNames) {
    if (name == s) return status;
  }
  throw DomainError("unknown status '" + std::string(s) + "'");
}

bool is_failure(Status s) { return s == Status::fail || s == Status::violated; }

void Report::fail_with(Json counterexample) {
  status = Status::fail;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(counterexample));
}

Json Report::to_json() const {
  Json j;
  j[title_key] = title;
  j[params_key] = params;
  if (!window.is_null()) j["window"] = window;
  j["status"] = std::string(to_string(status));
  j["checked"] = checked;
  if (skipped) j["skipped"] = skipped;
  j["counterexamples"] = counterexamples;
  return j;
}

void absorb(Report& into, const Report& part) {
  into.checked += part.checked;
  into.skipped += part.skipped;
  if (is_failure(part.status)) {
    into.status = Status::fail;
    for (const auto& c : part.counterexamples) {
      if (into.counterexamples.size() >= kMaxCounterexamples) break;
      Json tagged = c;
      tagged["from"] = part.title;
      into.counterexamples.push_back(std::move(tagged));
    }
  }
}

}  // namespace qfock
