#include "plausival/report.hpp"

namespace plausival {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::unmet:
      return "unmet";
  }
  return "unknown";
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json j;
  j["subject"] = report.subject;
  j["verdict"] = to_string(report.verdict);
  j["cases_checked"] = report.cases_checked;
  j["cases_skipped"] = report.cases_skipped;
  if (report.witness) j["witness"] = *report.witness;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

}  // namespace plausival
