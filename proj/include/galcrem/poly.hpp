// Sparse multivariate polynomials over an exact field.
//
// Terms live in a map keyed by exponent vector, ordered so that iteration
// starts at the graded-lexicographic leading monomial (variables compare in
// declaration order). Zero coefficients are never stored.
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galcrem/fields.hpp"

namespace galcrem {

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public PolyError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : PolyError(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

using Exponent = std::vector<std::uint32_t>;

struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

using VarList = std::vector<std::string>;

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, FieldElement, GrlexGreater>;

  MultiPoly(Field field, VarList vars);

  static MultiPoly constant(const Field& field, const VarList& vars, const FieldElement& c);
  static MultiPoly constant(const Field& field, const VarList& vars, long c) {
    return constant(field, vars, field.from_int(c));
  }
  static MultiPoly variable(const Field& field, const VarList& vars, const std::string& name);
  static MultiPoly monomial(const Field& field, const VarList& vars, Exponent e, const FieldElement& c);

  const Field& field() const { return field_; }
  const VarList& vars() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  /// Index of a variable name, or throws.
  std::size_t var_index(const std::string& name) const;
  bool has_var(const std::string& name) const;

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the zero exponent (zero if absent).
  FieldElement constant_term() const;
  FieldElement coefficient(const Exponent& e) const;

  /// Total degree, kNegInfDegree for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  int degree_in(const std::string& name) const { return degree_in(var_index(name)); }
  /// Lowest total degree among the terms (kNegInfDegree for zero).
  int low_degree() const;
  bool is_homogeneous() const;
  /// True when the variable occurs in some term.
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  const Exponent& leading_exponent() const;
  const FieldElement& leading_coefficient() const;

  void add_term(const Exponent& e, const FieldElement& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const FieldElement& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const FieldElement& c) { return a *= c; }
  friend MultiPoly operator*(const FieldElement& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;
  /// Quotient when `d` divides this exactly, nullopt otherwise.
  std::optional<MultiPoly> exact_div(const MultiPoly& d) const;
  /// Quotient; throws PolyError when the division leaves a remainder.
  MultiPoly divide_exact(const MultiPoly& d) const;
  bool divisible_by(const MultiPoly& d) const { return exact_div(d).has_value(); }

  MultiPoly derivative(std::size_t var) const;
  MultiPoly derivative(const std::string& name) const { return derivative(var_index(name)); }

  /// Substitutes polynomials for variables. Every variable of this
  /// polynomial must be assigned; images share a field and variable list.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;
  /// Positional substitution: images[i] replaces variable i.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  /// Replaces one variable by a constant; the variable stays declared.
  MultiPoly evaluate(std::size_t var, const FieldElement& value) const;
  /// Value at a full point (one entry per variable).
  FieldElement evaluate_all(const std::vector<FieldElement>& point) const;

  /// Same terms under a new (same length) list of variable names.
  MultiPoly rename(const VarList& names) const;
  /// Re-expresses this polynomial over a larger or reordered variable list;
  /// every variable that occurs must exist in `target`.
  MultiPoly embed(const VarList& target) const;

  /// Coefficients of powers of `var`, each with that variable absent.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var);

  /// Scalar multiple with leading coefficient 1 (zero stays zero).
  MultiPoly monic() const;
  /// Canonical content-free form: primitive integer coefficients with a
  /// positive leading coefficient when every coefficient is rational and the
  /// characteristic is 0; monic otherwise.
  MultiPoly content_normalized() const;

  std::string to_string() const;

 private:
  Field field_;
  std::shared_ptr<const VarList> vars_;
  TermMap terms_;

  void check_compatible(const MultiPoly& o) const;
};

/// Parses a polynomial over `field` in the declared variables. Grammar:
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base := variable | integer | integer '/' positive-integer | 'z' | '(' expr ')'
/// Multiplication must be written explicitly.
MultiPoly parse_poly(const std::string& text, const Field& field, const VarList& vars);

/// Homogenizes to total degree `degree` with the new variable `var`
/// appended to the variable list.
MultiPoly homogenize(const MultiPoly& p, const std::string& var, int degree);
/// Sets `var` to 1 and removes it from the variable list.
MultiPoly dehomogenize(const MultiPoly& p, const std::string& var);

/// Monic gcd of polynomials in any number of variables (recursive primitive
/// remainder sequences; univariate and binary inputs use subresultants).
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);
/// gcd for binary forms or univariate polynomials.
MultiPoly gcd_forms(const MultiPoly& f, const MultiPoly& g);

/// Sylvester resultant eliminating `var`: det of the Sylvester matrix with
/// the rows of f first. For f = a*prod(x - r_i) this equals
/// a^deg(g) * prod g(r_i), so Res(x - a, x - b) = a - b and
/// Res(g, f) = (-1)^(deg f * deg g) Res(f, g).
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

}  // namespace galcrem
