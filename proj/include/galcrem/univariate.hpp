// Dense univariate polynomials (coefficients low to high, no trailing zeros).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galcrem/fields.hpp"
#include "galcrem/poly.hpp"

namespace galcrem {

class UPoly {
 public:
  explicit UPoly(Field field) : field_(std::move(field)) {}
  UPoly(Field field, std::vector<FieldElement> coeffs);
  static UPoly constant(const FieldElement& c);
  /// The monomial c * x^k.
  static UPoly monomial(const FieldElement& c, unsigned k);
  static UPoly x(const Field& field) { return monomial(field.one(), 1); }

  /// Coefficients of a polynomial in which only `var` occurs.
  static UPoly from_multi(const MultiPoly& p, std::size_t var);
  MultiPoly to_multi(const VarList& vars, std::size_t var) const;

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  FieldElement leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const FieldElement& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly pow(unsigned e) const;
  /// Quotient and remainder; throws FieldError on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly monic() const;
  UPoly derivative() const;
  FieldElement operator()(const FieldElement& x) const;
  /// p(q(x)).
  UPoly compose(const UPoly& q) const;

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  Field field_;
  std::vector<FieldElement> c_;
};

/// Monic gcd by the subresultant remainder sequence; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Extended Euclid: returns (g, s, t) with s a + t b = g monic.
struct XgcdResult {
  UPoly g, s, t;
};
XgcdResult xgcd(const UPoly& a, const UPoly& b);
/// Interpolating polynomial of minimal degree through (xs[i], ys[i]).
UPoly interpolate(const Field& field, const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys);
/// Square root q with q^2 = p and leading coefficient `lead_root`
/// (lead_root^2 must equal lc(p)); nullopt when p is not such a square.
/// Requires characteristic != 2.
std::optional<UPoly> sqrt_with_leading(const UPoly& p, const FieldElement& lead_root);

}  // namespace galcrem
