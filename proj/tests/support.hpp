#pragma once

#include <random>
#include <string>

#include "galcrem/cremona.hpp"
#include "galcrem/curve.hpp"
#include "galcrem/fields.hpp"
#include "galcrem/galois.hpp"
#include "galcrem/maps.hpp"
#include "galcrem/poly.hpp"
#include "galcrem/scenario.hpp"
#include "galcrem/sqrt.hpp"

namespace gt {

using namespace galcrem;

inline Field Q() { return Field::rational(); }
inline Field cyc(std::uint64_t n) { return Field::make(FieldDescriptor::cyclotomic(n)); }
inline Field Fp(std::uint64_t p) { return Field::make(FieldDescriptor::prime(p)); }

inline FieldElement el(const std::string& s, const Field& k) { return parse_element(s, k); }
inline MultiPoly plane(const std::string& s, const Field& k) { return parse_poly(s, k, plane_vars()); }
inline MultiPoly line(const std::string& s, const Field& k) { return parse_poly(s, k, line_vars()); }
inline MultiPoly xy(const std::string& s, const Field& k) { return parse_poly(s, k, {"x", "y"}); }

inline Parametrization param(const Field& k, const std::string& a, const std::string& b, const std::string& c) {
  return Parametrization({line(a, k), line(b, k), line(c, k)});
}

inline ProjPoint pt(const Field& k, const std::string& a, const std::string& b, const std::string& c) {
  return ProjPoint(el(a, k), el(b, k), el(c, k));
}

inline Matrix mat3(const Field& k, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<FieldElement>> r;
  for (auto row : rows) {
    r.emplace_back();
    for (auto e : row) r.back().push_back(el(e, k));
  }
  return Matrix::from_rows(k, r);
}

/// Seeded element with small rational (or basis) coordinates.
inline FieldElement random_element(const Field& k, std::mt19937_64& rng, long range = 5) {
  std::uniform_int_distribution<long> d(-range, range);
  if (k.kind() == FieldKind::prime) return k.from_int(d(rng));
  std::vector<mpq_class> c;
  for (unsigned i = 0; i < k.degree(); ++i) c.emplace_back(d(rng), 1 + (rng() % 3));
  return k.from_coords(c);
}

inline FieldElement random_nonzero(const Field& k, std::mt19937_64& rng) {
  for (;;)
    if (auto e = random_element(k, rng); !e.is_zero()) return e;
}

inline LineMobius random_mobius(const Field& k, std::mt19937_64& rng) {
  for (;;) {
    auto a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng), d = random_element(k, rng);
    if (!(a * d - b * c).is_zero()) return LineMobius(a, b, c, d);
  }
}

}  // namespace gt
