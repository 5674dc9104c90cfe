#include "pentagon/relations.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "detail.hpp"
#include "pentagon/errors.hpp"

namespace pentagon {

namespace {

struct PlacedSide {
  std::vector<PlacedOperator> factors;  // reading order

  SparseVector apply(SparseVector v) const {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) v = it->apply(v);
    return v;
  }

  Operator product(Field field, const std::vector<std::size_t>& dims) const {
    Operator acc = Operator::identity(field, dims);
    for (const auto& f : factors) acc = acc * f.materialize();
    return acc;
  }
};

PlacedSide place_side(const std::vector<Factor>& side, const std::vector<std::size_t>& dims) {
  PlacedSide out;
  for (const auto& f : side) {
    if (f.op == nullptr) throw Error("relation factor has no operator");
    out.factors.emplace_back(*f.op, LegPlacement{dims.size(), f.legs, dims});
  }
  return out;
}

Field side_field(const OperatorIdentity& identity) {
  for (const auto* side : {&identity.lhs, &identity.rhs})
    for (const auto& f : *side) return f.op->field();
  return Field::Q;
}

Witness basis_witness(std::size_t j, const SparseVector& lhs, const SparseVector& rhs,
                      const std::vector<std::size_t>& dims) {
  return Witness{unflatten(j, dims), detail::labelled(lhs, dims), detail::labelled(rhs, dims)};
}

std::size_t first_failure(const PlacedSide& lhs, const PlacedSide& rhs, std::size_t dim, Field field,
                          unsigned threads) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const Scalar one = Scalar::one(field);
  auto differs = [&](std::size_t j) {
    SparseVector v{{j, one}};
    return lhs.apply(v) != rhs.apply(v);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, dim / 16)));
  if (threads <= 1) {
    for (std::size_t j = 0; j < dim; ++j)
      if (differs(j)) return j;
    return none;
  }
  // Interleaved assignment; each worker stops once it passes the best failure so far.
  std::atomic<std::size_t> best{none};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t j = t; j < dim; j += threads) {
        if (j >= best.load(std::memory_order_relaxed)) return;
        if (differs(j)) {
          std::size_t cur = best.load();
          while (j < cur && !best.compare_exchange_weak(cur, j)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return best.load();
}

void require_two_equal_legs(const Operator& s, const char* what) {
  if (s.legs() != 2 || !s.square_legs() || s.row_dims()[0] != s.row_dims()[1]) {
    throw DimensionMismatch(std::string(what) + ": operator must act on two equal square legs");
  }
}

}  // namespace

VerificationReport check_identity(const OperatorIdentity& identity, const EvalOptions& options) {
  const auto& dims = identity.leg_dims;
  const std::size_t dim = product(dims);
  auto report = make_report(identity.id, dim);
  ReportTimer timer(report);
  const PlacedSide lhs = place_side(identity.lhs, dims);
  const PlacedSide rhs = place_side(identity.rhs, dims);
  const Field field = side_field(identity);

  if (options.strategy == Strategy::FullProduct) {
    if (dim > kFullProductLimit) {
      throw DimensionMismatch("full-product evaluation is limited to dimension " +
                              std::to_string(kFullProductLimit));
    }
    const Operator l = lhs.product(field, dims);
    const Operator r = rhs.product(field, dims);
    for (std::size_t j = 0; j < dim; ++j) {
      if (l.column(j) == r.column(j)) continue;
      SparseVector lv;
      SparseVector rv;
      for (const auto& [i, v] : l.column(j)) lv.emplace(i, v);
      for (const auto& [i, v] : r.column(j)) rv.emplace(i, v);
      report.holds = false;
      report.witness = basis_witness(j, lv, rv, dims);
      break;
    }
    return report;
  }

  const std::size_t j = first_failure(lhs, rhs, dim, field, options.threads);
  if (j < dim) {
    SparseVector v{{j, Scalar::one(field)}};
    report.holds = false;
    report.witness = basis_witness(j, lhs.apply(v), rhs.apply(v), dims);
  }
  return report;
}

VerificationReport check_pentagon(const Operator& s, const EvalOptions& options) {
  require_two_equal_legs(s, "check_pentagon");
  const std::size_t d = s.row_dims()[0];
  return check_identity({RelationId::Pentagon, {d, d, d}, {{&s, {0, 1}}, {&s, {0, 2}}, {&s, {1, 2}}},
                         {{&s, {1, 2}}, {&s, {0, 1}}}},
                        options);
}

VerificationReport check_reversed_pentagon(const Operator& st, const EvalOptions& options) {
  require_two_equal_legs(st, "check_reversed_pentagon");
  const std::size_t d = st.row_dims()[0];
  return check_identity({RelationId::ReversedPentagon, {d, d, d}, {{&st, {0, 1}}, {&st, {1, 2}}},
                         {{&st, {1, 2}}, {&st, {0, 2}}, {&st, {0, 1}}}},
                        options);
}

std::vector<VerificationReport> check_mixed_pentagons(const Operator& s, const Operator& sp, const Operator& spp,
                                                      const Operator& st, const EvalOptions& options) {
  for (const Operator* op : {&s, &sp, &spp, &st}) require_two_equal_legs(*op, "check_mixed_pentagons");
  const std::size_t d = s.row_dims()[0];
  for (const Operator* op : {&sp, &spp, &st})
    if (op->row_dims()[0] != d) throw DimensionMismatch("check_mixed_pentagons: operators act on different spaces");
  const std::vector<std::size_t> dims{d, d, d};
  const std::vector<OperatorIdentity> ids{
      {RelationId::MixedPentagon1, dims, {{&sp, {0, 1}}, {&sp, {0, 2}}, {&s, {1, 2}}}, {{&s, {1, 2}}, {&sp, {0, 1}}}},
      {RelationId::MixedPentagon2, dims, {{&st, {0, 1}}, {&sp, {1, 2}}}, {{&sp, {1, 2}}, {&sp, {0, 2}}, {&st, {0, 1}}}},
      {RelationId::MixedPentagon3, dims, {{&s, {0, 1}}, {&spp, {0, 2}}, {&spp, {1, 2}}}, {{&spp, {1, 2}}, {&s, {0, 1}}}},
      {RelationId::MixedPentagon4, dims, {{&spp, {0, 1}}, {&st, {1, 2}}}, {{&st, {1, 2}}, {&spp, {0, 2}}, {&spp, {0, 1}}}},
      {RelationId::MixedPentagon5, dims, {{&sp, {0, 1}}, {&st, {0, 2}}, {&spp, {1, 2}}}, {{&spp, {1, 2}}, {&sp, {0, 1}}}},
      {RelationId::MixedPentagon6, dims, {{&spp, {0, 1}}, {&sp, {1, 2}}}, {{&sp, {1, 2}}, {&s, {0, 2}}, {&spp, {0, 1}}}},
  };
  std::vector<VerificationReport> out;
  for (const auto& id : ids) out.push_back(check_identity(id, options));
  return out;
}

VerificationReport check_yang_baxter(const Operator& r, std::size_t legs_per_site, const EvalOptions& options) {
  if (!r.square_legs() || r.legs() == 0 || r.legs() % 2 != 0) {
    throw DimensionMismatch("check_yang_baxter: R must have an even number of square legs");
  }
  if (legs_per_site == 0) legs_per_site = r.legs() / 2;
  if (2 * legs_per_site != r.legs()) throw DimensionMismatch("check_yang_baxter: R must act on two sites");
  const auto& rd = r.row_dims();
  if (!std::equal(rd.begin(), rd.begin() + static_cast<long>(legs_per_site), rd.begin() + static_cast<long>(legs_per_site))) {
    throw DimensionMismatch("check_yang_baxter: both sites of R must have the same leg dimensions");
  }
  std::vector<std::size_t> dims;
  for (int site = 0; site < 3; ++site) dims.insert(dims.end(), rd.begin(), rd.begin() + static_cast<long>(legs_per_site));
  auto legs = [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < legs_per_site; ++k) out.push_back(a * legs_per_site + k);
    for (std::size_t k = 0; k < legs_per_site; ++k) out.push_back(b * legs_per_site + k);
    return out;
  };
  return check_identity({RelationId::YangBaxter, dims, {{&r, legs(0, 1)}, {&r, legs(0, 2)}, {&r, legs(1, 2)}},
                         {{&r, legs(1, 2)}, {&r, legs(0, 2)}, {&r, legs(0, 1)}}},
                        options);
}

VerificationReport check_mixed_permutation(const Operator& s, const EvalOptions& options) {
  require_two_equal_legs(s, "check_mixed_permutation");
  const std::size_t d = s.row_dims()[0];
  return check_identity({RelationId::MixedPermutation, {d, d, d}, {{&s, {1, 0}}, {&s, {1, 2}}, {&s, {0, 2}}},
                         {{&s, {0, 2}}, {&s, {1, 0}}}},
                        options);
}

VerificationReport check_fg_relations(const Operator& s, const EvalOptions& options) {
  require_two_equal_legs(s, "check_fg_relations");
  const std::size_t d = s.row_dims()[0];
  const std::vector<std::size_t> dims{d, d, d};
  auto f_family = check_identity(
      {RelationId::FGRelations, dims, {{&s, {0, 1}}, {&s, {0, 2}}, {&s, {1, 2}}}, {{&s, {1, 2}}, {&s, {0, 1}}}}, options);
  f_family.detail = "F1 F2 S12 = S12 F1";
  if (!f_family.holds) return f_family;
  auto g_family = check_identity(
      {RelationId::FGRelations, dims, {{&s, {1, 2}}, {&s, {1, 0}}, {&s, {2, 0}}}, {{&s, {2, 0}}, {&s, {1, 2}}}}, options);
  g_family.detail = g_family.holds ? "both families" : "S12 G1 G2 = G2 S12";
  g_family.elapsed_ms += f_family.elapsed_ms;
  return g_family;
}

VerificationReport check_drinfeld_relations(const StructureConstants& sc, const std::vector<Operator>& e,
                                            const std::vector<Operator>& e_dual) {
  const std::size_t n = sc.dim;
  if (e.size() != n || e_dual.size() != n) throw DimensionMismatch("check_drinfeld_relations: need dim generators");
  auto report = make_report(RelationId::DrinfeldRelations, e.empty() ? 0 : e[0].rows());
  ReportTimer timer(report);
  const Operator zero(e[0].field(), e[0].row_dims(), e[0].col_dims());
  auto fail = [&](std::size_t family, std::size_t a, std::size_t b, const Operator& lhs, const Operator& rhs) {
    if (auto w = detail::compare_operators({family, a, b}, lhs, rhs)) {
      report.holds = false;
      report.witness = std::move(w);
      return true;
    }
    return false;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Operator rhs = zero;
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar k = sc.mult(a, b, c);
        if (!k.is_zero()) rhs = rhs + e[c].scaled(k);
      }
      if (fail(0, a, b, e[a] * e[b], rhs)) return report;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Operator rhs = zero;
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar k = sc.comult(c, a, b);
        if (!k.is_zero()) rhs = rhs + e_dual[c].scaled(k);
      }
      if (fail(1, a, b, e_dual[a] * e_dual[b], rhs)) return report;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Operator lhs = zero;
      Operator rhs = zero;
      for (const auto& [k, v] : sc.mu) {
        if (k[0] != a) continue;
        for (std::size_t r = 0; r < n; ++r) {
          // mu_a^{s c} m_{c r}^b E_s E^r   with (s, c) = (k[1], k[2])
          const Scalar ml = sc.mult(k[2], r, b);
          if (!ml.is_zero()) lhs = lhs + (e[k[1]] * e_dual[r]).scaled(v * ml);
          // m_{r c}^b mu_a^{c s} E^r E_s   with (c, s) = (k[1], k[2])
          const Scalar mr = sc.mult(r, k[1], b);
          if (!mr.is_zero()) rhs = rhs + (e_dual[r] * e[k[2]]).scaled(v * mr);
        }
      }
      if (fail(2, a, b, lhs, rhs)) return report;
    }
  }
  return report;
}

VerificationReport check_equal(const Operator& lhs, const Operator& rhs, std::string label) {
  auto report = make_report(RelationId::OperatorEquality, lhs.rows());
  ReportTimer timer(report);
  report.detail = std::move(label);
  if (auto w = detail::compare_operators({}, lhs, rhs)) {
    report.holds = false;
    report.witness = std::move(w);
  }
  return report;
}

}  // namespace pentagon
