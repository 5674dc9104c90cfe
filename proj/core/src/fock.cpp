#include "pentagon/fock.hpp"

#include <string>
#include <vector>

#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

std::string occupation_label(const Occupation& n) {
  return "|" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," + std::to_string(n[2]) + ">";
}

std::vector<std::pair<std::string, Scalar>> labelled(const FockVector& v) {
  std::vector<std::pair<std::string, Scalar>> out;
  for (const auto& [n, c] : v) out.emplace_back(occupation_label(n), Scalar(c));
  return out;
}

}  // namespace

FockVector apply_exp(std::size_t i, std::size_t j, const FockVector& v) {
  if (i > 2 || j > 2 || i == j) throw DimensionMismatch("apply_exp: legs must be distinct and < 3");
  FockVector out;
  for (const auto& [n, c] : v) {
    // a_i^k |n_i> = n_i!/(n_i-k)! |n_i-k>, divided by k! gives binomial(n_i, k)
    mpz_class binom = 1;
    for (unsigned k = 0; k <= n[i]; ++k) {
      if (k > 0) binom = binom * (n[i] - k + 1) / k;
      Occupation m = n;
      m[i] -= k;
      m[j] += k;
      Rational& slot = out[m];
      slot = slot + c * Rational(binom, mpz_class(1));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::pair<FockVector, FockVector> weyl_pentagon_sides(const Occupation& n) {
  const FockVector start{{n, Rational(1)}};
  // Operators act right to left: S12 S13 S23 applies S23 first.
  FockVector lhs = apply_exp(0, 1, apply_exp(0, 2, apply_exp(1, 2, start)));
  FockVector rhs = apply_exp(1, 2, apply_exp(0, 1, start));
  return {std::move(lhs), std::move(rhs)};
}

VerificationReport weyl_pentagon_check(unsigned max_occupation) {
  if (max_occupation < 1) throw InvalidStructure("weyl_pentagon_check: max occupation must be at least 1");
  const unsigned side = max_occupation + 1;
  VerificationReport report = make_report(RelationId::WeylPentagon, static_cast<std::size_t>(side) * side * side);
  ReportTimer timer(report);
  for (unsigned a = 0; a < side && report.holds; ++a) {
    for (unsigned b = 0; b < side && report.holds; ++b) {
      for (unsigned c = 0; c < side && report.holds; ++c) {
        auto [lhs, rhs] = weyl_pentagon_sides({a, b, c});
        if (lhs == rhs) continue;
        report.holds = false;
        report.witness = Witness{{a, b, c}, labelled(lhs), labelled(rhs)};
      }
    }
  }
  report.detail = "occupations <= " + std::to_string(max_occupation);
  return report;
}

}  // namespace pentagon
