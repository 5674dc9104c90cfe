// Recursive-descent parser for the scalar grammar:
//
//   scalar := expr ('/' expr)?
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := INT | 'q' ('^' UINT)? | '(' expr ')'
//
// Blanks are skipped. Only ASCII is accepted. In field Q the symbol q is rejected.

#include <cctype>

#include "pentagon/errors.hpp"
#include "pentagon/scalar.hpp"

namespace pentagon {
namespace {

class Parser {
 public:
  Parser(std::string_view text, Field field) : text_(text), field_(field) {}

  Scalar parse() {
    skip_blank();
    if (at_end()) fail("empty scalar");
    Polynomial num = expr();
    Polynomial den(1);
    if (peek() == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      den = expr();
      if (den.is_zero()) throw ParseError("zero denominator", den_pos);
    }
    skip_blank();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    if (field_ == Field::Q) {
      // no q anywhere, so both sides are constants
      return Scalar(Rational(num.coefficient(0), den.coefficient(0)));
    }
    return Scalar(RationalFunction(std::move(num), std::move(den)));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  char peek() {
    skip_blank();
    return at_end() ? '\0' : text_[pos_];
  }

  void skip_blank() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void check_ascii() const {
    if (!at_end() && static_cast<unsigned char>(text_[pos_]) >= 0x80) {
      fail("non-ASCII character (use ASCII '-' for minus)");
    }
  }

  Polynomial expr() {
    Polynomial acc;
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  static bool starts_factor(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '('; }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial factor() {
    const char c = peek();
    check_ascii();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial(std::vector<mpz_class>{integer()});
    }
    if (c == 'q') {
      if (field_ == Field::Q) fail("symbol q is not allowed in field Q");
      ++pos_;
      unsigned long exponent = 1;
      if (peek() == '^') {
        ++pos_;
        skip_blank();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
        const mpz_class e = integer();
        if (e > 4096) fail("exponent too large");
        exponent = e.get_ui();
      }
      return Polynomial::monomial(static_cast<unsigned>(exponent));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, Field field) { return Parser(text, field).parse(); }

}  // namespace pentagon
