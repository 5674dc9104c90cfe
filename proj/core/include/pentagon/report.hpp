#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pentagon/scalar.hpp"

namespace pentagon {

enum class RelationId {
  Pentagon,
  ReversedPentagon,
  MixedPentagon1,
  MixedPentagon2,
  MixedPentagon3,
  MixedPentagon4,
  MixedPentagon5,
  MixedPentagon6,
  YangBaxter,
  MixedPermutation,
  FGRelations,
  DrinfeldRelations,
  HeisenbergRelations,
  TildeRelations,
  Associativity,
  Coassociativity,
  Compatibility,
  UnitLaws,
  CounitLaws,
  AntipodeInverse,
  OperatorEquality,
  Pairing,
  TraceDuality,
  CenterCheck,
  DilogIdentity,
  WeylPentagon,
};

std::string_view relation_name(RelationId id);

/// The first discrepancy found: the input that exposed it and both sides'
/// nonzero coefficients, keyed by a printable index.
struct Witness {
  std::vector<std::size_t> basis;
  std::vector<std::pair<std::string, Scalar>> lhs;
  std::vector<std::pair<std::string, Scalar>> rhs;
};

struct VerificationReport {
  std::string relation;
  bool holds = true;
  std::optional<Witness> witness;
  std::size_t space_dim = 0;
  double elapsed_ms = 0.0;
  /// Free-form label, e.g. which example or which family produced the report.
  std::string detail;
};

VerificationReport make_report(RelationId id, std::size_t space_dim);

bool all_hold(const std::vector<VerificationReport>& reports);

/// One human-readable line (plus the witness when the relation fails).
std::string format_report(const VerificationReport& report);

/// Measures wall time into report.elapsed_ms while alive.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& report);
  ~ReportTimer();
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  long long start_ns_;
};

}  // namespace pentagon
