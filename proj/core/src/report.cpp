#include "pentagon/report.hpp"

#include <chrono>
#include <cstdio>

namespace pentagon {

std::string_view relation_name(RelationId id) {
  switch (id) {
    case RelationId::Pentagon: return "pentagon";
    case RelationId::ReversedPentagon: return "reversed_pentagon";
    case RelationId::MixedPentagon1: return "mixed_pentagon_1";
    case RelationId::MixedPentagon2: return "mixed_pentagon_2";
    case RelationId::MixedPentagon3: return "mixed_pentagon_3";
    case RelationId::MixedPentagon4: return "mixed_pentagon_4";
    case RelationId::MixedPentagon5: return "mixed_pentagon_5";
    case RelationId::MixedPentagon6: return "mixed_pentagon_6";
    case RelationId::YangBaxter: return "yang_baxter";
    case RelationId::MixedPermutation: return "mixed_permutation";
    case RelationId::FGRelations: return "fg_relations";
    case RelationId::DrinfeldRelations: return "drinfeld_relations";
    case RelationId::HeisenbergRelations: return "heisenberg_relations";
    case RelationId::TildeRelations: return "tilde_relations";
    case RelationId::Associativity: return "associativity";
    case RelationId::Coassociativity: return "coassociativity";
    case RelationId::Compatibility: return "compatibility";
    case RelationId::UnitLaws: return "unit_laws";
    case RelationId::CounitLaws: return "counit_laws";
    case RelationId::AntipodeInverse: return "antipode_inverse";
    case RelationId::OperatorEquality: return "operator_equality";
    case RelationId::Pairing: return "pairing";
    case RelationId::TraceDuality: return "trace_duality";
    case RelationId::CenterCheck: return "center_check";
    case RelationId::DilogIdentity: return "dilog_identity";
    case RelationId::WeylPentagon: return "weyl_pentagon";
  }
  return "unknown";
}

VerificationReport make_report(RelationId id, std::size_t space_dim) {
  VerificationReport r;
  r.relation = std::string(relation_name(id));
  r.space_dim = space_dim;
  return r;
}

bool all_hold(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

namespace {

std::string side_string(const std::vector<std::pair<std::string, Scalar>>& side) {
  if (side.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (i) s += " + ";
    s += "(" + side[i].second.to_string() + ")[" + side[i].first + "]";
  }
  return s;
}

}  // namespace

std::string format_report(const VerificationReport& report) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f ms", report.elapsed_ms);
  std::string line = std::string(report.holds ? "[PASS] " : "[FAIL] ") + report.relation;
  if (!report.detail.empty()) line += " (" + report.detail + ")";
  line += "  space_dim=" + std::to_string(report.space_dim) + "  " + timing;
  if (report.witness) {
    const Witness& w = *report.witness;
    line += "\n  witness basis [";
    for (std::size_t i = 0; i < w.basis.size(); ++i) line += (i ? "," : "") + std::to_string(w.basis[i]);
    line += "]\n    lhs = " + side_string(w.lhs) + "\n    rhs = " + side_string(w.rhs);
  }
  return line;
}

ReportTimer::ReportTimer(VerificationReport& report)
    : report_(report),
      start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

ReportTimer::~ReportTimer() {
  const long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now().time_since_epoch())
                            .count();
  report_.elapsed_ms = static_cast<double>(now - start_ns_) / 1e6;
}

}  // namespace pentagon
