#include "pentagon/reconstruction.hpp"

#include "pentagon/errors.hpp"
#include "pentagon/linalg.hpp"
#include "pentagon/relations.hpp"

namespace pentagon {

namespace {

void require_two_equal_legs(const Operator& s) {
  if (s.legs() != 2 || !s.square_legs() || s.row_dims()[0] != s.row_dims()[1]) {
    throw DimensionMismatch("reconstruction needs an operator on two equal square legs");
  }
}

Scalar trace(const Operator& a) {
  Scalar t = Scalar::zero(a.field());
  for (std::size_t i = 0; i < a.cols(); ++i) t += a.at(i, i);
  return t;
}

Operator linear_combination(const std::vector<Operator>& basis, const std::vector<Scalar>& coeffs) {
  Operator acc(basis[0].field(), basis[0].row_dims(), basis[0].col_dims());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) acc = acc + basis[k].scaled(coeffs[k]);
  return acc;
}

VerificationReport trace_duality(const std::vector<Operator>& dual, const std::vector<Operator>& primal,
                                 const char* label) {
  auto report = make_report(RelationId::TraceDuality, primal.size());
  ReportTimer timer(report);
  report.detail = label;
  for (std::size_t a = 0; a < dual.size(); ++a) {
    for (std::size_t b = 0; b < primal.size(); ++b) {
      const Scalar t = trace(dual[a] * primal[b]);
      const Scalar expected = a == b ? Scalar::one(t.field()) : Scalar::zero(t.field());
      if (!(t == expected)) {
        report.holds = false;
        report.witness = Witness{{a, b}, {{"tr", t}}, {{"tr", expected}}};
        return report;
      }
    }
  }
  return report;
}

std::optional<std::vector<Scalar>> solve_vector(const Matrix& a, const Matrix& b) {
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < x->rows(); ++i) out.push_back((*x)(i, 0));
  return out;
}

}  // namespace

std::size_t literal_dimension(const Operator& s) {
  require_two_equal_legs(s);
  const Operator p = swap_operator(s.field(), s.row_dims()[0]);
  return rank(Matrix::from_operator((p * s).partial_transpose(0)));
}

std::size_t dimension(const Operator& s) {
  const std::size_t literal = literal_dimension(s);
  const std::size_t reshuffled = rank(Matrix::from_operator(reshuffle(s, reconstruction_grouping())));
  if (literal != reshuffled) {
    throw Error("internal error: literal rank " + std::to_string(literal) + " differs from reshuffle rank " +
                std::to_string(reshuffled));
  }
  return literal;
}

Factorization factorize(const Operator& s) {
  require_two_equal_legs(s);
  const std::size_t d = s.row_dims()[0];
  const RankFactorization rf = rank_factorize(reshuffle(s, reconstruction_grouping()));
  Factorization out;
  for (std::size_t a = 0; a < rf.rank; ++a) {
    Operator g(s.field(), {d}, {d});
    Operator f(s.field(), {d}, {d});
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        g.accumulate(i, j, rf.left(i * d + j, a));
        f.accumulate(i, j, rf.right(a, i * d + j));
      }
    }
    out.g.push_back(std::move(g));
    out.f.push_back(std::move(f));
  }
  return out;
}

std::vector<Operator> dual_matrices(const std::vector<Operator>& f) {
  if (f.empty()) return {};
  const std::size_t r = f.size();
  const std::size_t d = f[0].rows();
  const Field field = f[0].field();
  // Row b: tr(X F^b) = sum_{ij} X_ij F^b_ji as a linear form in vec(X).
  Matrix a(field, r, d * d);
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t c = 0; c < d; ++c)
      for (const auto& [row, v] : f[b].column(c)) a(b, c * d + row) = v;
  if (rank(a) != r) throw Error("dual_matrices: matrices are linearly dependent under the trace pairing");
  const auto x = solve(a, Matrix::identity(field, r));
  if (!x) throw Error("dual_matrices: trace-dual system is inconsistent");
  std::vector<Operator> out;
  for (std::size_t k = 0; k < r; ++k) {
    Operator dual(field, {d}, {d});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) dual.accumulate(i, j, (*x)(i * d + j, k));
    out.push_back(std::move(dual));
  }
  return out;
}

StructureConstants structure_constants(const std::vector<Operator>& g, const std::vector<Operator>& g_dual,
                                       const std::vector<Operator>& f, const std::vector<Operator>& f_dual) {
  const std::size_t r = g.size();
  if (r == 0 || g_dual.size() != r || f.size() != r || f_dual.size() != r) {
    throw DimensionMismatch("structure_constants: factor lists must be nonempty and of equal length");
  }
  StructureConstants sc;
  sc.field = g[0].field();
  sc.dim = r;
  std::vector<Scalar> coeffs(r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const Operator gg = g[a] * g[b];
      for (std::size_t c = 0; c < r; ++c) coeffs[c] = trace(gg * g_dual[c]);
      if (!(linear_combination(g, coeffs) == gg)) {
        throw ClosureViolation("G_" + std::to_string(a) + " G_" + std::to_string(b) + " is not in span{G}");
      }
      for (std::size_t c = 0; c < r; ++c) sc.set_mult(a, b, c, coeffs[c]);

      const Operator ff = f[a] * f[b];
      for (std::size_t c = 0; c < r; ++c) coeffs[c] = trace(ff * f_dual[c]);
      if (!(linear_combination(f, coeffs) == ff)) {
        throw ClosureViolation("F^" + std::to_string(a) + " F^" + std::to_string(b) + " is not in span{F}");
      }
      for (std::size_t c = 0; c < r; ++c) sc.set_comult(c, a, b, coeffs[c]);
    }
  }
  return sc;
}

std::optional<std::vector<Scalar>> find_unit(const StructureConstants& sc) {
  const std::size_t n = sc.dim;
  Matrix a(sc.field, 2 * n * n, n);
  Matrix b(sc.field, 2 * n * n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t row = x * n + y;
      for (std::size_t k = 0; k < n; ++k) {
        a(row, k) = sc.mult(k, x, y);
        a(n * n + row, k) = sc.mult(x, k, y);
      }
      if (x == y) b(row, 0) = b(n * n + row, 0) = Scalar::one(sc.field);
    }
  }
  return solve_vector(a, b);
}

std::optional<std::vector<Scalar>> find_counit(const StructureConstants& sc) {
  const std::size_t n = sc.dim;
  Matrix a(sc.field, 2 * n * n, n);
  Matrix b(sc.field, 2 * n * n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t row = x * n + y;
      for (std::size_t k = 0; k < n; ++k) {
        a(row, k) = sc.comult(x, k, y);
        a(n * n + row, k) = sc.comult(x, y, k);
      }
      if (x == y) b(row, 0) = b(n * n + row, 0) = Scalar::one(sc.field);
    }
  }
  return solve_vector(a, b);
}

std::vector<VerificationReport> validate(const ReconstructionResult& result, const Operator& s) {
  std::vector<VerificationReport> out;
  const StructureConstants& sc = result.constants;
  out.push_back(check_associativity(sc));
  out.push_back(check_coassociativity(sc));
  out.push_back(check_compatibility(sc));

  const StructureConstants swapped = dual_bialgebra(sc);
  out.push_back(check_associativity(swapped));
  out.back().detail = "F-side algebra";
  out.push_back(check_coassociativity(swapped));
  out.back().detail = "G-side coalgebra";

  out.push_back(trace_duality(result.g_dual, result.g, "G"));
  out.push_back(trace_duality(result.f_dual, result.f, "F"));

  Operator pairing(s.field(), s.row_dims(), s.col_dims());
  for (std::size_t a = 0; a < result.dim; ++a) pairing = pairing + Operator::kron(result.g[a], result.f[a]);
  auto pair_report = check_equal(pairing, s, "sum G_a (x) F^a = S");
  pair_report.relation = std::string(relation_name(RelationId::Pairing));
  out.push_back(std::move(pair_report));

  out.push_back(check_pentagon(canonical_element(sc)));
  out.back().detail = "rebuilt canonical element";
  return out;
}

ReconstructionResult reconstruct(const Operator& s) {
  require_two_equal_legs(s);
  if (s.nnz() == 0) throw Error("reconstruction: S = 0 has no nonzero expansion (rank 0)");
  ReconstructionResult result;
  result.dim = dimension(s);
  Factorization fac = factorize(s);
  if (fac.g.size() != result.dim) throw Error("internal error: factorization length differs from dimension");
  result.g = std::move(fac.g);
  result.f = std::move(fac.f);
  result.g_dual = dual_matrices(result.g);
  result.f_dual = dual_matrices(result.f);
  result.constants = structure_constants(result.g, result.g_dual, result.f, result.f_dual);
  result.diagnostics = validate(result, s);
  result.unit = find_unit(result.constants);
  result.counit = find_counit(result.constants);
  return result;
}

}  // namespace pentagon
