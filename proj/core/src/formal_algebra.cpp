#include "pentagon/formal_algebra.hpp"

#include <utility>

#include "pentagon/errors.hpp"

namespace pentagon {

std::string monomial_label(const Monomial& m) {
  static constexpr char kNames[3] = {'V', 'W', 'U'};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

NormalOrderedElement NormalOrderedElement::constant(const Scalar& value) {
  return monomial(value.field(), {0, 0, 0}, value);
}

NormalOrderedElement NormalOrderedElement::monomial(Field field, const Monomial& m, const Scalar& coeff) {
  NormalOrderedElement out(field);
  out.add_term(m, coeff);
  return out;
}

Scalar NormalOrderedElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<unsigned> NormalOrderedElement::min_degree() const {
  std::optional<unsigned> out;
  for (const auto& [m, c] : terms_) {
    if (!out || total_degree(m) < *out) out = total_degree(m);
  }
  return out;
}

void NormalOrderedElement::add_term(const Monomial& m, const Scalar& coeff) {
  if (coeff.field() != field_) throw FieldMismatch("normal-ordered element: coefficient field differs");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

NormalOrderedElement& NormalOrderedElement::operator+=(const NormalOrderedElement& o) {
  if (o.field_ != field_) throw FieldMismatch("normal-ordered element: field mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NormalOrderedElement& NormalOrderedElement::operator-=(const NormalOrderedElement& o) {
  if (o.field_ != field_) throw FieldMismatch("normal-ordered element: field mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NormalOrderedElement NormalOrderedElement::scaled(const Scalar& s) const {
  NormalOrderedElement out(field_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * s);
  return out;
}

NormalOrderedElement NormalOrderedElement::truncated(unsigned max_degree) const {
  NormalOrderedElement out(field_);
  for (const auto& [m, c] : terms_) {
    if (total_degree(m) <= max_degree) out.terms_.emplace(m, c);
  }
  return out;
}

NormalOrderedElement NormalOrderedElement::without_w() const {
  NormalOrderedElement out(field_);
  for (const auto& [m, c] : terms_) {
    if (m[1] == 0) out.terms_.emplace(m, c);
  }
  return out;
}

NormalOrderedElement NormalOrderedElement::evaluate(const Rational& point) const {
  NormalOrderedElement out(Field::Q);
  for (const auto& [m, c] : terms_) out.add_term(m, c.evaluate(point));
  return out;
}

std::string NormalOrderedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += '(' + c.to_string() + ")*" + monomial_label(m);
  }
  return out;
}

RewriteRule RewriteRule::standard(const std::optional<Rational>& q0) {
  const Scalar q = q0 ? Scalar(*q0) : Scalar::q();
  return RewriteRule{q, q, Scalar::one(q.field()), NormalOrderedElement(q.field())};
}

bool RewriteRule::degree_preserving() const {
  for (const auto& [m, c] : extra.terms()) {
    if (total_degree(m) != 2) return false;
  }
  return true;
}

struct FormalAlgebra::Cache {
  std::map<std::pair<unsigned, unsigned>, NormalOrderedElement> u_v;
};

FormalAlgebra::FormalAlgebra(RewriteRule rule, unsigned max_degree)
    : rule_(std::move(rule)), max_degree_(max_degree), cache_(std::make_unique<Cache>()) {
  const Field f = rule_.q.field();
  if (rule_.vu.field() != f || rule_.w.field() != f || rule_.extra.field() != f) {
    throw FieldMismatch("rewrite rule: scalars from different fields");
  }
}

FormalAlgebra::~FormalAlgebra() = default;
FormalAlgebra::FormalAlgebra(FormalAlgebra&&) noexcept = default;
FormalAlgebra& FormalAlgebra::operator=(FormalAlgebra&&) noexcept = default;

// U^c V^a in normal order, untruncated.
const NormalOrderedElement& FormalAlgebra::u_power_times_v_power(unsigned c, unsigned a) {
  const auto key = std::make_pair(c, a);
  if (auto it = cache_->u_v.find(key); it != cache_->u_v.end()) return it->second;

  const Field f = field();
  NormalOrderedElement out(f);
  if (c == 0 || a == 0) {
    out.add_term({a, 0, c}, Scalar::one(f));
  } else if (c == 1) {
    // U V^a = vu V (U V^{a-1}) + w W V^{a-1} + extra V^{a-1}
    const NormalOrderedElement inner = u_power_times_v_power(1, a - 1);
    for (const auto& [m, coeff] : inner.terms()) out.add_term({m[0] + 1, m[1], m[2]}, coeff * rule_.vu);
    out.add_term({a - 1, 1, 0}, rule_.w);
    for (const auto& [m, coeff] : rule_.extra.terms()) {
      const NormalOrderedElement part = monomial_product(m, {a - 1, 0, 0});
      for (const auto& [mm, cc] : part.terms()) out.add_term(mm, cc * coeff);
    }
  } else {
    // U^c V^a = U^{c-1} (U V^a)
    const NormalOrderedElement once = u_power_times_v_power(1, a);
    for (const auto& [m, coeff] : once.terms()) {
      const NormalOrderedElement part = monomial_product({0, 0, c - 1}, m);
      for (const auto& [mm, cc] : part.terms()) out.add_term(mm, cc * coeff);
    }
  }
  return cache_->u_v.emplace(key, std::move(out)).first->second;
}

// V^a1 W^b1 U^c1 * V^a2 W^b2 U^c2 = V^a1 W^(b1+b2) (U^c1 V^a2) U^c2
NormalOrderedElement FormalAlgebra::monomial_product(const Monomial& x, const Monomial& y) {
  const NormalOrderedElement& mid = u_power_times_v_power(x[2], y[0]);
  NormalOrderedElement out(field());
  for (const auto& [m, coeff] : mid.terms()) {
    out.add_term({x[0] + m[0], x[1] + y[1] + m[1], m[2] + y[2]}, coeff);
  }
  return out;
}

NormalOrderedElement FormalAlgebra::multiply(const NormalOrderedElement& a, const NormalOrderedElement& b) {
  if (a.field() != field() || b.field() != field()) throw FieldMismatch("multiply: field mismatch");
  const bool preserving = rule_.degree_preserving();
  NormalOrderedElement out(field());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (preserving && total_degree(ma) + total_degree(mb) > max_degree_) continue;
      const Scalar s = ca * cb;
      const NormalOrderedElement product = monomial_product(ma, mb);
      for (const auto& [m, c] : product.terms()) {
        if (total_degree(m) <= max_degree_) out.add_term(m, c * s);
      }
    }
  }
  return out;
}

NormalOrderedElement FormalAlgebra::power(const NormalOrderedElement& x, unsigned n) {
  NormalOrderedElement out = NormalOrderedElement::constant(Scalar::one(field()));
  for (unsigned i = 0; i < n; ++i) out = multiply(out, x);
  return out;
}

Scalar q_factorial(unsigned n) { return q_factorial(n, Scalar::q()); }

Scalar q_factorial(unsigned n, const Scalar& q) {
  const Scalar one = Scalar::one(q.field());
  Scalar out = one;
  Scalar qk = one;
  for (unsigned k = 1; k <= n; ++k) {
    qk *= q;
    out *= one - qk;
  }
  return out;
}

Scalar q_integer(unsigned a, const Scalar& q) {
  Scalar out = Scalar::zero(q.field());
  Scalar qk = Scalar::one(q.field());
  for (unsigned k = 0; k < a; ++k) {
    out += qk;
    qk *= q;
  }
  return out;
}

NormalOrderedElement pochhammer_series(FormalAlgebra& algebra, const NormalOrderedElement& x) {
  const Field f = algebra.field();
  const Scalar& q = algebra.q();
  NormalOrderedElement out = NormalOrderedElement::constant(Scalar::one(f));
  const auto low = x.min_degree();
  if (!low) return out;
  if (*low == 0) throw InvalidStructure("pochhammer_series: argument has a degree-0 term");

  NormalOrderedElement xn = NormalOrderedElement::constant(Scalar::one(f));
  Scalar q_tri = Scalar::one(f);  // q^{n(n-1)/2}
  Scalar q_n = Scalar::one(f);    // q^n
  Scalar fact = Scalar::one(f);   // (q)_n
  for (unsigned n = 1; n * *low <= algebra.max_degree(); ++n) {
    q_tri *= q_n;
    q_n *= q;
    fact *= Scalar::one(f) - q_n;
    xn = algebra.multiply(xn, x);
    Scalar c = q_tri / fact;
    if (n % 2 == 1) c = -c;
    out += xn.scaled(c);
  }
  return out;
}

namespace {

void check_q0(const std::optional<Rational>& q0) {
  if (q0 && (*q0 == Rational(1) || *q0 == Rational(-1))) {
    throw InvalidStructure("numeric q must not be 1 or -1 (the series denominators vanish)");
  }
}

}  // namespace

DilogSides dilog_sides(unsigned max_degree, bool set_w_zero, const std::optional<Rational>& q0) {
  check_q0(q0);
  FormalAlgebra alg(RewriteRule::standard(q0), max_degree);
  const Field f = alg.field();
  const auto u = NormalOrderedElement::u(f);
  const auto v = NormalOrderedElement::v(f);
  const Scalar one_minus_q = Scalar::one(f) - alg.q();
  const NormalOrderedElement m =
      (alg.multiply(u, v) - alg.multiply(v, u)).scaled(Scalar::one(f) / one_minus_q);

  const NormalOrderedElement eu = pochhammer_series(alg, u);
  const NormalOrderedElement ev = pochhammer_series(alg, v);
  const NormalOrderedElement em = pochhammer_series(alg, m);
  DilogSides out{alg.multiply(alg.multiply(eu, em), ev), alg.multiply(ev, eu)};
  if (set_w_zero) {
    out.lhs = out.lhs.without_w();
    out.rhs = out.rhs.without_w();
  }
  return out;
}

namespace {

std::optional<Witness> first_difference(const NormalOrderedElement& lhs, const NormalOrderedElement& rhs) {
  const NormalOrderedElement diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const Monomial& m = diff.terms().begin()->first;
  Witness w;
  w.basis = {m[0], m[1], m[2]};
  w.lhs.emplace_back(monomial_label(m), lhs.coefficient(m));
  w.rhs.emplace_back(monomial_label(m), rhs.coefficient(m));
  return w;
}

std::size_t monomial_count(unsigned max_degree, bool with_w) {
  std::size_t n = 0;
  for (unsigned b = 0; 2 * b <= max_degree; ++b) {
    if (b > 0 && !with_w) break;
    const unsigned rest = max_degree - 2 * b;
    n += static_cast<std::size_t>(rest + 1) * (rest + 2) / 2;
  }
  return n;
}

}  // namespace

VerificationReport verify_dilog_identity(unsigned max_degree, bool set_w_zero, const std::optional<Rational>& q0) {
  if (max_degree < 2) throw InvalidStructure("verify_dilog_identity: degree must be at least 2");
  check_q0(q0);
  VerificationReport report = make_report(RelationId::DilogIdentity, monomial_count(max_degree, !set_w_zero));
  {
    ReportTimer timer(report);
    const DilogSides sides = dilog_sides(max_degree, set_w_zero, q0);
    report.witness = first_difference(sides.lhs, sides.rhs);
    report.holds = !report.witness.has_value();
  }
  report.detail = "D=" + std::to_string(max_degree) + (set_w_zero ? ", W=0" : ", W free") +
                  (q0 ? ", q=" + q0->to_string() : "");
  return report;
}

VerificationReport center_check(unsigned max_degree, const RewriteRule& rule) {
  VerificationReport report = make_report(RelationId::CenterCheck, monomial_count(max_degree, true));
  ReportTimer timer(report);
  FormalAlgebra alg(rule, max_degree);
  const Field f = alg.field();
  const auto u = NormalOrderedElement::u(f);
  const auto v = NormalOrderedElement::v(f);
  const NormalOrderedElement w = alg.multiply(u, v) - alg.multiply(v, u).scaled(alg.q());
  const std::pair<const char*, NormalOrderedElement> commutators[] = {
      {"[U,W]", alg.multiply(u, w) - alg.multiply(w, u)},
      {"[V,W]", alg.multiply(v, w) - alg.multiply(w, v)},
  };
  for (const auto& [name, c] : commutators) {
    if (c.is_zero()) continue;
    report.holds = false;
    const auto& [m, coeff] = *c.terms().begin();
    Witness wit;
    wit.basis = {m[0], m[1], m[2]};
    wit.lhs.emplace_back(std::string(name) + " at " + monomial_label(m), coeff);
    wit.rhs.emplace_back(std::string(name) + " at " + monomial_label(m), Scalar::zero(f));
    report.witness = std::move(wit);
    report.detail = name;
    break;
  }
  if (report.holds) report.detail = "D=" + std::to_string(max_degree);
  return report;
}

}  // namespace pentagon
