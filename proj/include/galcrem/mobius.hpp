// Automorphisms of the projective line.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "galcrem/linalg.hpp"
#include "galcrem/poly.hpp"

namespace galcrem {

/// [u:v] -> [a u + b v : c u + d v], stored scaled so that the first nonzero
/// entry of (a, b, c, d) is 1.
class LineMobius {
 public:
  /// Throws FieldError when ad - bc = 0.
  LineMobius(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d);
  explicit LineMobius(const Matrix& m);
  static LineMobius identity(const Field& field);
  static LineMobius diagonal(const FieldElement& a, const FieldElement& d);

  const Field& field() const { return m_.field(); }
  const Matrix& matrix() const { return m_; }
  FieldElement a() const { return m_(0, 0); }
  FieldElement b() const { return m_(0, 1); }
  FieldElement c() const { return m_(1, 0); }
  FieldElement d() const { return m_(1, 1); }
  FieldElement determinant() const { return a() * d() - b() * c(); }

  bool is_identity() const;
  /// this o other (other applied first).
  LineMobius operator*(const LineMobius& other) const;
  LineMobius inverse() const;
  LineMobius pow(unsigned e) const;
  /// Smallest k <= max_order with g^k = id, or 0.
  unsigned order(unsigned max_order) const;

  /// p(a u + b v, c u + d v) for a polynomial in the two named variables.
  MultiPoly act_on(const MultiPoly& p, const std::string& u = "u", const std::string& v = "v") const;

  friend bool operator==(const LineMobius& x, const LineMobius& y) { return x.m_ == y.m_; }
  friend bool operator<(const LineMobius& x, const LineMobius& y);

  std::string to_string() const;
  std::array<std::array<std::string, 2>, 2> to_strings() const;

 private:
  Matrix m_;
  void normalize();
};

}  // namespace galcrem
