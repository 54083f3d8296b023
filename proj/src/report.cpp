#include "gendiag/report.hpp"

#include <nlohmann/json.hpp>

namespace gendiag {

using nlohmann::json;

std::string poset_report_json(const PosetReport& report) {
  json j;
  j["command"] = "verify";
  j["parameters"] = {{"mode", "poset"}, {"n", report.n}};
  json relation = json::array();
  for (auto [a, b] : report.relation)
    relation.push_back({format_class(report.reps[a]), format_class(report.reps[b])});
  j["results"] = {{"class_count", report.class_count},
                  {"relation_size", report.relation.size()},
                  {"relation", relation}};
  json failures = json::array();
  for (const auto& f : report.axiom_failures) failures.push_back({{"kind", "axiom"}, {"detail", f}});
  for (const auto& f : report.bruhat_containment_failures)
    failures.push_back({{"kind", "bruhat_containment"}, {"detail", f}});
  j["failures"] = failures;
  return j.dump(2) + "\n";
}

std::string audit_report_json(const AuditReport& report) {
  json j;
  j["command"] = "verify";
  j["parameters"] = {{"mode", "audit"},
                     {"n", report.n},
                     {"trials", report.trials},
                     {"seed", report.seed}};
  j["results"] = {{"pairs_total", report.pairs_total},
                  {"monte_carlo_pairs", report.monte_carlo_pairs},
                  {"witness_pairs", report.witness_pairs},
                  {"strict_gap_pairs", report.strict_gap_pairs}};
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"kind", "audit"}, {"detail", f}});
  j["failures"] = failures;
  return j.dump(2) + "\n";
}

}  // namespace gendiag
