#include "galcrem/univariate.hpp"

#include <sstream>

namespace galcrem {

UPoly::UPoly(Field field, std::vector<FieldElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

UPoly UPoly::constant(const FieldElement& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const FieldElement& c, unsigned k) {
  std::vector<FieldElement> v(k + 1, c.field().zero());
  v[k] = c;
  return UPoly(c.field(), std::move(v));
}

UPoly UPoly::from_multi(const MultiPoly& p, std::size_t var) {
  UPoly out(p.field());
  if (p.is_zero()) return out;
  out.c_.assign(static_cast<std::size_t>(p.degree_in(var)) + 1, p.field().zero());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw PolyError("polynomial is not univariate in " + p.vars()[var]);
    out.c_[e[var]] = c;
  }
  out.trim();
  return out;
}

MultiPoly UPoly::to_multi(const VarList& vars, std::size_t var) const {
  MultiPoly out(field_, vars);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    Exponent e(vars.size(), 0);
    e[var] = static_cast<std::uint32_t>(k);
    out.add_term(e, c_[k]);
  }
  return out;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(a.field_, std::move(r));
}

UPoly operator*(UPoly a, const FieldElement& c) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result = constant(field_.one());
  UPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw FieldError("polynomial division by zero");
  UPoly q(field_);
  UPoly r = *this;
  if (r.degree() < d.degree()) return {q, r};
  q.c_.assign(c_.size() - d.c_.size() + 1, field_.zero());
  FieldElement inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    FieldElement f = r.leading() * inv;
    q.c_[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i)
      if (!d.c_[i].is_zero()) r.c_[shift + i] -= f * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_);
  std::vector<FieldElement> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * field_.from_int(static_cast<long>(k)));
  return UPoly(field_, std::move(d));
}

FieldElement UPoly::operator()(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly acc(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * q + constant(c_[k]);
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  return to_multi({var}, 0).to_string();
}

UPoly gcd(const UPoly& a0, const UPoly& b0) {
  UPoly a = a0, b = b0;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  // Subresultant PRS: prem by b, then divide by beta = -g * h^delta.
  const Field& k = a.field();
  FieldElement g = k.one(), h = k.one();
  FieldElement minus_one = -k.one();
  while (!b.is_zero()) {
    int delta = a.degree() - b.degree();
    UPoly r = (a * b.leading().pow(delta + 1)).divmod(b).second;
    if (r.is_zero()) break;
    if (r.degree() == 0) return UPoly::constant(k.one());
    FieldElement beta = (delta % 2 == 0 ? minus_one : k.one()) * g * h.pow(delta);
    a = b;
    b = r * beta.inverse();
    g = a.leading();
    h = delta == 0 ? h : g.pow(delta) * h.pow(1 - delta);
  }
  return b.monic();
}

XgcdResult xgcd(const UPoly& a, const UPoly& b) {
  const Field& k = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(k.one()), s1(k);
  UPoly t0(k), t1 = UPoly::constant(k.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly interpolate(const Field& field, const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys) {
  // Newton divided differences.
  std::size_t n = xs.size();
  std::vector<FieldElement> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly acc(field);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * UPoly(field, {-xs[i], field.one()}) + UPoly::constant(dd[i]);
  }
  return acc;
}

std::optional<UPoly> sqrt_with_leading(const UPoly& p, const FieldElement& lead_root) {
  const Field& k = p.field();
  if (p.is_zero()) return UPoly(k);
  if (p.degree() % 2 != 0) return std::nullopt;
  if (!(lead_root * lead_root == p.leading())) return std::nullopt;
  std::size_t m = static_cast<std::size_t>(p.degree() / 2);
  std::vector<FieldElement> q(m + 1, k.zero());
  q[m] = lead_root;
  FieldElement inv2r = (k.from_int(2) * lead_root).inverse();
  for (std::size_t i = m; i-- > 0;) {
    // coefficient of x^(m+i) in q^2 = 2 q_m q_i + sum_{j+l=m+i, i<j,l<m} q_j q_l
    FieldElement s = p.coeff(m + i);
    for (std::size_t j = i + 1; j < m; ++j) {
      std::size_t l = m + i - j;
      if (l > i && l < m) s -= q[j] * q[l];
    }
    q[i] = s * inv2r;
  }
  UPoly r(k, q);
  if (!(r * r == p)) return std::nullopt;
  return r;
}

}  // namespace galcrem
