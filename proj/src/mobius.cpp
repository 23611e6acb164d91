#include "galcrem/mobius.hpp"

#include <map>

namespace galcrem {

LineMobius::LineMobius(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d)
    : m_(Matrix::from_rows(a.field(), {{a, b}, {c, d}})) {
  normalize();
}

LineMobius::LineMobius(const Matrix& m) : m_(m) {
  if (m.rows() != 2 || m.cols() != 2) throw FieldError("line automorphism needs a 2x2 matrix");
  normalize();
}

void LineMobius::normalize() {
  if (m_.determinant().is_zero()) throw FieldError("singular 2x2 matrix is not a line automorphism");
  m_ = m_.normalized();
}

LineMobius LineMobius::identity(const Field& field) { return LineMobius(Matrix::identity(field, 2)); }

LineMobius LineMobius::diagonal(const FieldElement& a, const FieldElement& d) {
  const Field& k = a.field();
  return LineMobius(a, k.zero(), k.zero(), d);
}

bool LineMobius::is_identity() const { return m_ == Matrix::identity(field(), 2); }

LineMobius LineMobius::operator*(const LineMobius& other) const { return LineMobius(m_ * other.m_); }

LineMobius LineMobius::inverse() const { return LineMobius(d(), -b(), -c(), a()); }

LineMobius LineMobius::pow(unsigned e) const {
  LineMobius r = identity(field());
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

unsigned LineMobius::order(unsigned max_order) const {
  LineMobius r = *this;
  for (unsigned k = 1; k <= max_order; ++k) {
    if (r.is_identity()) return k;
    r = r * *this;
  }
  return 0;
}

MultiPoly LineMobius::act_on(const MultiPoly& p, const std::string& u, const std::string& v) const {
  const Field& k = p.field();
  MultiPoly U = MultiPoly::variable(k, p.vars(), u), V = MultiPoly::variable(k, p.vars(), v);
  std::map<std::string, MultiPoly> sub;
  sub.emplace(u, U * a() + V * b());
  sub.emplace(v, U * c() + V * d());
  return p.substitute(sub);
}

bool operator<(const LineMobius& x, const LineMobius& y) {
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (canonical_less(x.m_(i, j), y.m_(i, j))) return true;
      if (canonical_less(y.m_(i, j), x.m_(i, j))) return false;
    }
  return false;
}

std::string LineMobius::to_string() const {
  return "[[" + a().to_string() + ", " + b().to_string() + "], [" + c().to_string() + ", " + d().to_string() + "]]";
}

std::array<std::array<std::string, 2>, 2> LineMobius::to_strings() const {
  return {{{a().to_string(), b().to_string()}, {c().to_string(), d().to_string()}}};
}

}  // namespace galcrem
