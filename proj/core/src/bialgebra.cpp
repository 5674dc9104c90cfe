#include "pentagon/bialgebra.hpp"

#include <algorithm>
#include <string>

#include "detail.hpp"
#include "pentagon/errors.hpp"

namespace pentagon {

namespace detail {

std::string tuple_label(std::span<const std::size_t> tuple) {
  std::string s;
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + std::to_string(tuple[i]);
  return s;
}

std::string index_label(std::size_t flat, std::span<const std::size_t> dims) {
  const MultiIndex idx = unflatten(flat, dims);
  return tuple_label(idx);
}

std::vector<std::pair<std::string, Scalar>> labelled(const SparseVector& v, std::span<const std::size_t> dims) {
  std::vector<std::pair<std::string, Scalar>> out;
  out.reserve(v.size());
  for (const auto& [k, x] : v) out.emplace_back(index_label(k, dims), x);
  return out;
}

std::optional<Witness> compare_operators(std::vector<std::size_t> basis, const Operator& a, const Operator& b) {
  if (a == b) return std::nullopt;
  if (a.row_dims() != b.row_dims() || a.col_dims() != b.col_dims()) {
    return Witness{std::move(basis), {}, {}};
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (a.column(c) == b.column(c)) continue;
    basis.push_back(c);
    Witness w{std::move(basis), {}, {}};
    const std::string col = index_label(c, a.col_dims());
    for (const auto& [r, v] : a.column(c)) w.lhs.emplace_back(index_label(r, a.row_dims()) + ";" + col, v);
    for (const auto& [r, v] : b.column(c)) w.rhs.emplace_back(index_label(r, b.row_dims()) + ";" + col, v);
    return w;
  }
  return Witness{std::move(basis), {}, {}};
}

}  // namespace detail

namespace {

Scalar lookup3(const Tensor3& t, std::size_t a, std::size_t b, std::size_t c, Field f) {
  auto it = t.find({a, b, c});
  return it == t.end() ? Scalar::zero(f) : it->second;
}

Scalar lookup2(const std::optional<Tensor2>& t, std::size_t a, std::size_t b, Field f, const char* what) {
  if (!t) throw MissingHopfData(std::string("structure constants have no ") + what);
  auto it = t->find({a, b});
  return it == t->end() ? Scalar::zero(f) : it->second;
}

void put(Tensor3& t, std::size_t a, std::size_t b, std::size_t c, const Scalar& v) {
  if (v.is_zero()) {
    t.erase({a, b, c});
  } else {
    t[{a, b, c}] = v;
  }
}

// m by the pair (a,b): list of (c, value); mu by first index: list of (b, c, value).
struct Indexed {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Scalar>>> m;
  std::vector<std::vector<std::pair<std::array<std::size_t, 2>, Scalar>>> mu;

  explicit Indexed(const StructureConstants& sc) : mu(sc.dim) {
    for (const auto& [k, v] : sc.m) m[{k[0], k[1]}].emplace_back(k[2], v);
    for (const auto& [k, v] : sc.mu) mu[k[0]].push_back({{k[1], k[2]}, v});
  }

  const std::vector<std::pair<std::size_t, Scalar>>& prod(std::size_t a, std::size_t b) const {
    static const std::vector<std::pair<std::size_t, Scalar>> empty;
    auto it = m.find({a, b});
    return it == m.end() ? empty : it->second;
  }
};

template <typename Key>
void add_to(std::map<Key, Scalar>& acc, const Key& key, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// First key (in order) where the maps disagree, with both values.
template <typename Key>
std::optional<Key> first_difference(const std::map<Key, Scalar>& a, const std::map<Key, Scalar>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) return ia->first;
    if (ia == a.end() || ib->first < ia->first) return ib->first;
    if (!(ia->second == ib->second)) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

template <typename Key>
Scalar value_or_zero(const std::map<Key, Scalar>& m, const Key& k, Field f) {
  auto it = m.find(k);
  return it == m.end() ? Scalar::zero(f) : it->second;
}

Witness component_witness(std::vector<std::size_t> basis, const Scalar& lhs, const Scalar& rhs) {
  std::string label = detail::tuple_label(basis);
  Witness w{std::move(basis), {}, {}};
  if (!lhs.is_zero()) w.lhs.emplace_back(label, lhs);
  if (!rhs.is_zero()) w.rhs.emplace_back(label, rhs);
  return w;
}

Scalar delta(std::size_t a, std::size_t b, Field f) { return a == b ? Scalar::one(f) : Scalar::zero(f); }

}  // namespace

Scalar StructureConstants::mult(std::size_t a, std::size_t b, std::size_t c) const { return lookup3(m, a, b, c, field); }
Scalar StructureConstants::comult(std::size_t a, std::size_t b, std::size_t c) const {
  return lookup3(mu, a, b, c, field);
}
Scalar StructureConstants::gamma(std::size_t a, std::size_t b) const {
  return lookup2(antipode, a, b, field, "antipode");
}
Scalar StructureConstants::gamma_inv(std::size_t a, std::size_t b) const {
  return lookup2(antipode_inv, a, b, field, "inverse antipode");
}

void StructureConstants::set_mult(std::size_t a, std::size_t b, std::size_t c, const Scalar& v) { put(m, a, b, c, v); }
void StructureConstants::set_comult(std::size_t a, std::size_t b, std::size_t c, const Scalar& v) {
  put(mu, a, b, c, v);
}

void StructureConstants::validate() const {
  if (dim == 0) throw InvalidStructure("dim must be positive");
  auto check3 = [&](const Tensor3& t, const char* name) {
    for (const auto& [k, v] : t) {
      if (k[0] >= dim || k[1] >= dim || k[2] >= dim) throw InvalidStructure(std::string(name) + ": index out of range");
      if (v.field() != field) throw InvalidStructure(std::string(name) + ": value in wrong field");
    }
  };
  check3(m, "m");
  check3(mu, "mu");
  auto check_vec = [&](const std::optional<std::vector<Scalar>>& v, const char* name) {
    if (!v) return;
    if (v->size() != dim) throw InvalidStructure(std::string(name) + ": length must equal dim");
    for (const auto& x : *v)
      if (x.field() != field) throw InvalidStructure(std::string(name) + ": value in wrong field");
  };
  check_vec(unit, "unit");
  check_vec(counit, "counit");
  auto check2 = [&](const std::optional<Tensor2>& t, const char* name) {
    if (!t) return;
    for (const auto& [k, v] : *t) {
      if (k[0] >= dim || k[1] >= dim) throw InvalidStructure(std::string(name) + ": index out of range");
      if (v.field() != field) throw InvalidStructure(std::string(name) + ": value in wrong field");
    }
  };
  check2(antipode, "antipode");
  check2(antipode_inv, "antipode_inv");
  if (antipode.has_value() != antipode_inv.has_value()) {
    throw InvalidStructure("antipode and antipode_inv must be given together");
  }
  if (antipode && !check_antipode_inverse(*this).holds) {
    throw InvalidStructure("antipode_inv is not the inverse of antipode");
  }
  if (unit && !check_unit_laws(*this).holds) throw InvalidStructure("unit laws fail");
  if (counit && !check_counit_laws(*this).holds) throw InvalidStructure("counit laws fail");
}

VerificationReport check_associativity(const StructureConstants& sc) {
  auto report = make_report(RelationId::Associativity, sc.dim * sc.dim * sc.dim);
  ReportTimer timer(report);
  const Indexed ix(sc);
  for (std::size_t a = 0; a < sc.dim; ++a) {
    for (std::size_t b = 0; b < sc.dim; ++b) {
      for (std::size_t c = 0; c < sc.dim; ++c) {
        std::map<std::size_t, Scalar> left;   // (e_a e_b) e_c
        std::map<std::size_t, Scalar> right;  // e_a (e_b e_c)
        for (const auto& [s, v] : ix.prod(a, b))
          for (const auto& [t, w] : ix.prod(s, c)) add_to(left, t, v * w);
        for (const auto& [s, v] : ix.prod(b, c))
          for (const auto& [t, w] : ix.prod(a, s)) add_to(right, t, v * w);
        if (auto t = first_difference(left, right)) {
          report.holds = false;
          report.witness = component_witness({a, b, c, *t}, value_or_zero(left, *t, sc.field),
                                             value_or_zero(right, *t, sc.field));
          return report;
        }
      }
    }
  }
  return report;
}

VerificationReport check_coassociativity(const StructureConstants& sc) {
  auto report = make_report(RelationId::Coassociativity, sc.dim);
  ReportTimer timer(report);
  const Indexed ix(sc);
  using Key = std::array<std::size_t, 3>;
  for (std::size_t a = 0; a < sc.dim; ++a) {
    std::map<Key, Scalar> left;   // (Delta (x) id) Delta
    std::map<Key, Scalar> right;  // (id (x) Delta) Delta
    for (const auto& [bc, v] : ix.mu[a]) {
      for (const auto& [xy, w] : ix.mu[bc[0]]) add_to(left, Key{xy[0], xy[1], bc[1]}, v * w);
      for (const auto& [xy, w] : ix.mu[bc[1]]) add_to(right, Key{bc[0], xy[0], xy[1]}, v * w);
    }
    if (auto k = first_difference(left, right)) {
      report.holds = false;
      report.witness = component_witness({a, (*k)[0], (*k)[1], (*k)[2]}, value_or_zero(left, *k, sc.field),
                                         value_or_zero(right, *k, sc.field));
      return report;
    }
  }
  return report;
}

VerificationReport check_compatibility(const StructureConstants& sc) {
  auto report = make_report(RelationId::Compatibility, sc.dim * sc.dim);
  ReportTimer timer(report);
  const Indexed ix(sc);
  using Key = std::array<std::size_t, 2>;
  for (std::size_t a = 0; a < sc.dim; ++a) {
    for (std::size_t b = 0; b < sc.dim; ++b) {
      std::map<Key, Scalar> left;   // Delta(e_a e_b)
      std::map<Key, Scalar> right;  // Delta(e_a) Delta(e_b)
      for (const auto& [g, v] : ix.prod(a, b))
        for (const auto& [rs, w] : ix.mu[g]) add_to(left, rs, v * w);
      for (const auto& [rs1, v1] : ix.mu[a]) {
        for (const auto& [rs2, v2] : ix.mu[b]) {
          const Scalar coeff = v1 * v2;
          for (const auto& [r, w1] : ix.prod(rs1[0], rs2[0]))
            for (const auto& [s, w2] : ix.prod(rs1[1], rs2[1])) add_to(right, Key{r, s}, coeff * w1 * w2);
        }
      }
      if (auto k = first_difference(left, right)) {
        report.holds = false;
        report.witness = component_witness({a, b, (*k)[0], (*k)[1]}, value_or_zero(left, *k, sc.field),
                                           value_or_zero(right, *k, sc.field));
        return report;
      }
    }
  }
  return report;
}

VerificationReport check_unit_laws(const StructureConstants& sc) {
  auto report = make_report(RelationId::UnitLaws, sc.dim);
  ReportTimer timer(report);
  if (!sc.unit) {
    report.holds = false;
    report.detail = "no unit";
    report.witness = Witness{};
    return report;
  }
  const auto& u = *sc.unit;
  for (std::size_t b = 0; b < sc.dim; ++b) {
    for (std::size_t c = 0; c < sc.dim; ++c) {
      Scalar left = Scalar::zero(sc.field);
      Scalar right = Scalar::zero(sc.field);
      for (std::size_t a = 0; a < sc.dim; ++a) {
        if (u[a].is_zero()) continue;
        left += u[a] * sc.mult(a, b, c);
        right += sc.mult(b, a, c) * u[a];
      }
      const Scalar expected = delta(b, c, sc.field);
      if (!(left == expected) || !(right == expected)) {
        report.holds = false;
        report.witness = component_witness({b, c}, left == expected ? right : left, expected);
        return report;
      }
    }
  }
  return report;
}

VerificationReport check_counit_laws(const StructureConstants& sc) {
  auto report = make_report(RelationId::CounitLaws, sc.dim);
  ReportTimer timer(report);
  if (!sc.counit) {
    report.holds = false;
    report.detail = "no counit";
    report.witness = Witness{};
    return report;
  }
  const auto& e = *sc.counit;
  for (std::size_t a = 0; a < sc.dim; ++a) {
    for (std::size_t x = 0; x < sc.dim; ++x) {
      Scalar left = Scalar::zero(sc.field);   // (eps (x) id) Delta(e_a), coefficient of e_x
      Scalar right = Scalar::zero(sc.field);  // (id (x) eps) Delta(e_a)
      for (std::size_t y = 0; y < sc.dim; ++y) {
        if (!e[y].is_zero()) {
          left += sc.comult(a, y, x) * e[y];
          right += sc.comult(a, x, y) * e[y];
        }
      }
      const Scalar expected = delta(a, x, sc.field);
      if (!(left == expected) || !(right == expected)) {
        report.holds = false;
        report.witness = component_witness({a, x}, left == expected ? right : left, expected);
        return report;
      }
    }
  }
  return report;
}

VerificationReport check_antipode_inverse(const StructureConstants& sc) {
  auto report = make_report(RelationId::AntipodeInverse, sc.dim * sc.dim);
  ReportTimer timer(report);
  if (!sc.has_hopf_data()) throw MissingHopfData("antipode and antipode_inv are required");
  for (std::size_t a = 0; a < sc.dim; ++a) {
    for (std::size_t b = 0; b < sc.dim; ++b) {
      Scalar forward = Scalar::zero(sc.field);
      Scalar backward = Scalar::zero(sc.field);
      for (std::size_t c = 0; c < sc.dim; ++c) {
        forward += sc.gamma(a, c) * sc.gamma_inv(c, b);
        backward += sc.gamma_inv(a, c) * sc.gamma(c, b);
      }
      const Scalar expected = delta(a, b, sc.field);
      if (!(forward == expected) || !(backward == expected)) {
        report.holds = false;
        report.witness = component_witness({a, b}, forward == expected ? backward : forward, expected);
        return report;
      }
    }
  }
  return report;
}

Representation adjoint_rep(const StructureConstants& sc) {
  Representation rep;
  const std::vector<std::size_t> dims{sc.dim};
  rep.lower.assign(sc.dim, Operator(sc.field, dims, dims));
  rep.upper.assign(sc.dim, Operator(sc.field, dims, dims));
  for (const auto& [k, v] : sc.m) rep.lower[k[1]].accumulate(k[0], k[2], v);
  for (const auto& [k, v] : sc.mu) rep.upper[k[1]].accumulate(k[0], k[2], v);
  return rep;
}

namespace {

Operator zero_like(const Operator& op) { return Operator(op.field(), op.row_dims(), op.col_dims()); }

// Checks the three Heisenberg-type families; `cross_upper_first` selects the
// ordering of the cross relation (e_a e^b for H, e~^b e~_a for the tilde double).
VerificationReport check_double_relations(RelationId id, const StructureConstants& sc, const Representation& rep,
                                          bool tilde) {
  auto report = make_report(id, sc.dim);
  ReportTimer timer(report);
  if (rep.lower.size() != sc.dim || rep.upper.size() != sc.dim) {
    throw DimensionMismatch("representation size does not match dim");
  }
  const std::size_t n = sc.dim;
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
      Operator rhs = zero_like(rep.lower[0]);
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar k = sc.mult(a, b, c);
        if (!k.is_zero()) rhs = rhs + rep.lower[c].scaled(k);
      }
      if (fail(0, a, b, rep.lower[a] * rep.lower[b], rhs)) return report;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Operator rhs = zero_like(rep.upper[0]);
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar k = sc.comult(c, a, b);
        if (!k.is_zero()) rhs = rhs + rep.upper[c].scaled(k);
      }
      if (fail(1, a, b, rep.upper[a] * rep.upper[b], rhs)) return report;
    }
  }
  const Indexed ix(sc);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Operator rhs = zero_like(rep.lower[0]);
      if (!tilde) {
        // e_a e^b = m_{rc}^b mu_a^{cs} e^r e_s
        for (const auto& [cs, v] : ix.mu[a]) {
          for (std::size_t r = 0; r < n; ++r) {
            const Scalar k = sc.mult(r, cs[0], b);
            if (!k.is_zero()) rhs = rhs + (rep.upper[r] * rep.lower[cs[1]]).scaled(k * v);
          }
        }
        if (fail(2, a, b, rep.lower[a] * rep.upper[b], rhs)) return report;
      } else {
        // e~^b e~_a = mu_a^{sc} m_{cr}^b e~_s e~^r
        for (const auto& [sc_idx, v] : ix.mu[a]) {
          for (std::size_t r = 0; r < n; ++r) {
            const Scalar k = sc.mult(sc_idx[1], r, b);
            if (!k.is_zero()) rhs = rhs + (rep.lower[sc_idx[0]] * rep.upper[r]).scaled(k * v);
          }
        }
        if (fail(2, a, b, rep.upper[b] * rep.lower[a], rhs)) return report;
      }
    }
  }
  return report;
}

}  // namespace

VerificationReport check_heisenberg_relations(const StructureConstants& sc, const Representation& rep) {
  return check_double_relations(RelationId::HeisenbergRelations, sc, rep, false);
}

VerificationReport check_tilde_relations(const StructureConstants& sc, const Representation& tilde) {
  return check_double_relations(RelationId::TildeRelations, sc, tilde, true);
}

Operator canonical_element(const Representation& rep) {
  if (rep.lower.empty() || rep.lower.size() != rep.upper.size()) {
    throw DimensionMismatch("canonical_element: representation is empty or unbalanced");
  }
  Operator s = Operator::kron(rep.lower[0], rep.upper[0]);
  for (std::size_t a = 1; a < rep.lower.size(); ++a) s = s + Operator::kron(rep.lower[a], rep.upper[a]);
  return s;
}

Representation tilde_rep(const StructureConstants& sc, const Representation& rep) {
  if (!sc.has_hopf_data()) throw MissingHopfData("tilde double needs antipode and antipode_inv");
  if (!check_antipode_inverse(sc).holds) throw InvalidStructure("antipode_inv is not the inverse of antipode");
  const std::size_t n = sc.dim;
  std::vector<Operator> lower_t;
  std::vector<Operator> upper_t;
  for (std::size_t b = 0; b < n; ++b) {
    lower_t.push_back(rep.lower[b].transpose());
    upper_t.push_back(rep.upper[b].transpose());
  }
  Representation out;
  for (std::size_t a = 0; a < n; ++a) {
    Operator lo = zero_like(rep.lower[a]);
    Operator up = zero_like(rep.upper[a]);
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar g = sc.gamma(a, b);
      if (!g.is_zero()) lo = lo + lower_t[b].scaled(g);
      const Scalar gi = sc.gamma_inv(b, a);
      if (!gi.is_zero()) up = up + upper_t[b].scaled(gi);
    }
    out.lower.push_back(std::move(lo));
    out.upper.push_back(std::move(up));
  }
  return out;
}

CayleyTable cyclic_group_table(std::size_t n) {
  if (n == 0) throw InvalidStructure("cyclic group order must be positive");
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

CayleyTable symmetric3_table() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  CayleyTable t(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<std::size_t, 3> gh{};
      for (std::size_t x = 0; x < 3; ++x) gh[x] = perms[g][perms[h][x]];
      t[g][h] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), gh) - perms.begin());
    }
  }
  return t;
}

StructureConstants group_algebra(const CayleyTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidStructure("Cayley table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidStructure("Cayley table is not square");
    for (auto x : row)
      if (x >= n) throw InvalidStructure("Cayley table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw InvalidStructure("Cayley table is not associative");
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (identity == n) throw InvalidStructure("Cayley table has no identity element");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == identity && table[h][g] == identity) inverse[g] = h;
  for (auto x : inverse)
    if (x == n) throw InvalidStructure("Cayley table has an element without inverse");

  StructureConstants sc;
  sc.field = Field::Q;
  sc.dim = n;
  const Scalar one = Scalar::one(Field::Q);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) sc.set_mult(g, h, table[g][h], one);
    sc.set_comult(g, g, g, one);
  }
  sc.unit = std::vector<Scalar>(n, Scalar::zero(Field::Q));
  (*sc.unit)[identity] = one;
  sc.counit = std::vector<Scalar>(n, one);
  sc.antipode = Tensor2{};
  sc.antipode_inv = Tensor2{};
  for (std::size_t g = 0; g < n; ++g) {
    (*sc.antipode)[{g, inverse[g]}] = one;
    (*sc.antipode_inv)[{g, inverse[g]}] = one;
  }
  return sc;
}

StructureConstants dual_bialgebra(const StructureConstants& sc) {
  StructureConstants d;
  d.field = sc.field;
  d.dim = sc.dim;
  // e^a e^b = mu_c^{ab} e^c  and  Delta(e^c) = m_{ab}^c e^a (x) e^b
  for (const auto& [k, v] : sc.mu) d.m[{k[1], k[2], k[0]}] = v;
  for (const auto& [k, v] : sc.m) d.mu[{k[2], k[0], k[1]}] = v;
  d.unit = sc.counit;
  d.counit = sc.unit;
  if (sc.has_hopf_data()) {
    d.antipode = Tensor2{};
    d.antipode_inv = Tensor2{};
    for (const auto& [k, v] : *sc.antipode) (*d.antipode)[{k[1], k[0]}] = v;
    for (const auto& [k, v] : *sc.antipode_inv) (*d.antipode_inv)[{k[1], k[0]}] = v;
  }
  return d;
}

}  // namespace pentagon
