// Rational functions in one variable and polynomials over them.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galcrem/univariate.hpp"

namespace galcrem {

/// num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  explicit RatFunc(Field field) : num_(field), den_(UPoly::constant(field.one())) {}
  RatFunc(UPoly num);  // NOLINT: polynomials are rational functions
  RatFunc(UPoly num, UPoly den);
  static RatFunc constant(const FieldElement& c) { return RatFunc(UPoly::constant(c)); }

  const Field& field() const { return num_.field(); }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  RatFunc inverse() const;
  RatFunc pow(unsigned e) const;

  /// Value at a point, nullopt at a pole.
  std::optional<FieldElement> operator()(const FieldElement& y) const;
  std::string to_string(const std::string& var = "y") const;

 private:
  UPoly num_, den_;
};

/// Dense polynomial in x over k(y), low to high.
class RatPoly {
 public:
  explicit RatPoly(Field field) : field_(std::move(field)) {}
  RatPoly(Field field, std::vector<RatFunc> coeffs);
  /// Reads p(x, y) in the variables named `xvar` and `yvar`.
  static RatPoly from_multi(const MultiPoly& p, const std::string& xvar, const std::string& yvar);
  static RatPoly constant(const RatFunc& c) { return RatPoly(c.field(), {c}); }
  static RatPoly x(const Field& field);

  const Field& field() const { return field_; }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(std::size_t k) const { return k < c_.size() ? c_[k] : RatFunc(field_); }
  RatFunc leading() const { return c_.empty() ? RatFunc(field_) : c_.back(); }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatFunc& c);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  RatPoly operator%(const RatPoly& d) const { return divmod(d).second; }
  RatPoly monic() const;
  RatPoly derivative() const;
  /// p(q) for q another polynomial over k(y).
  RatPoly compose(const RatPoly& q) const;

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<RatFunc> c_;
};

/// Inverse of a modulo f, nullopt when they are not coprime.
std::optional<RatPoly> inverse_mod(const RatPoly& a, const RatPoly& f);

/// x -> (alpha x + beta) / (gamma x + delta) with coefficients in k(y).
struct MobiusOverBase {
  RatFunc alpha, beta, gamma, delta;

  static MobiusOverBase identity(const Field& field);
  RatFunc determinant() const { return alpha * delta - beta * gamma; }
  /// Same transformation with polynomial coefficients of no common factor.
  MobiusOverBase cleared() const;
  /// True when the two agree up to a nonzero factor in k(y).
  bool proportional_to(const MobiusOverBase& o) const;
  std::array<std::string, 4> to_strings(const std::string& var = "y") const;
};

}  // namespace galcrem
