#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>

namespace plausival {

// unmet: a hypothesis or side-condition the check relies on does not hold,
// so the conclusion was not evaluated.
enum class Verdict { pass, fail, unmet };

std::string to_string(Verdict v);

struct AxiomReport {
  std::string subject;
  Verdict verdict = Verdict::pass;
  std::size_t cases_checked = 0;
  std::size_t cases_skipped = 0;
  // Exact inputs and both sides of the violated relation.
  std::optional<nlohmann::json> witness;
  std::string note;

  bool passed() const noexcept { return verdict == Verdict::pass; }
};

/// {subject, verdict, cases_checked, cases_skipped, witness?, note?}
nlohmann::json to_json(const AxiomReport& report);

}  // namespace plausival
