// Recursive-descent parser for the polynomial expression grammar.
#include <algorithm>
#include <cctype>

#include "galcrem/poly.hpp"

namespace galcrem {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Field& field, const VarList& vars)
      : s_(text), field_(field), vars_(vars) {}

  MultiPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  const std::string& s_;
  const Field& field_;
  const VarList& vars_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly constant(const FieldElement& c) const { return MultiPoly::constant(field_, vars_, c); }

  // A leading sign is accepted in front of the first term of any expression.
  MultiPoly expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      mpz_class e = digits();
      if (!e.fits_uint_p() || e > 10000) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a natural number", start);
    return mpz_class(s_.substr(start, pos_ - start));
  }

  MultiPoly base() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      mpz_class num = digits();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t dpos = pos_;
        mpz_class den = digits();
        if (den == 0) throw ParseError("zero denominator", dpos);
        try {
          return constant(field_.from_rational(mpq_class(num, den)));
        } catch (const FieldError& e) {
          throw ParseError(std::string("coefficient not in field: ") + e.what(), start);
        }
      }
      return constant(field_.from_mpz(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (std::find(vars_.begin(), vars_.end(), name) != vars_.end())
        return MultiPoly::variable(field_, vars_, name);
      if (name == "z") {
        if (field_.kind() != FieldKind::cyclotomic)
          throw ParseError("coefficient not in field: z outside a cyclotomic field", start);
        return constant(field_.generator());
      }
      throw ParseError("undeclared variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const Field& field, const VarList& vars) {
  return Parser(text, field, vars).run();
}

}  // namespace galcrem
