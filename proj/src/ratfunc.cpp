#include "galcrem/ratfunc.hpp"

namespace galcrem {

RatFunc::RatFunc(UPoly num) : num_(std::move(num)), den_(UPoly::constant(num_.field().one())) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw FieldError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly::constant(num_.field().one());
    return;
  }
  UPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  FieldElement lc = den_.leading();
  if (!lc.is_one()) {
    FieldElement inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw FieldError("division by zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e)); }

std::optional<FieldElement> RatFunc::operator()(const FieldElement& y) const {
  FieldElement d = den_(y);
  if (d.is_zero()) return std::nullopt;
  return num_(y) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatPoly::RatPoly(Field field, std::vector<RatFunc> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::from_multi(const MultiPoly& p, const std::string& xvar, const std::string& yvar) {
  std::size_t xi = p.var_index(xvar), yi = p.var_index(yvar);
  RatPoly out(p.field());
  if (p.is_zero()) return out;
  std::vector<std::vector<FieldElement>> rows(static_cast<std::size_t>(p.degree_in(xi)) + 1);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != xi && i != yi && e[i] != 0) throw PolyError("unexpected variable " + p.vars()[i]);
    auto& row = rows[e[xi]];
    if (row.size() <= e[yi]) row.resize(e[yi] + 1, p.field().zero());
    row[e[yi]] = c;
  }
  for (auto& r : rows) out.c_.emplace_back(UPoly(p.field(), r));
  out.trim();
  return out;
}

RatPoly RatPoly::x(const Field& field) {
  return RatPoly(field, {RatFunc(field), RatFunc::constant(field.one())});
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(a.field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(a.field_, std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(a.field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(a.field_, std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly(a.field_);
  std::vector<RatFunc> c(a.c_.size() + b.c_.size() - 1, RatFunc(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!a.c_[i].is_zero() && !b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(a.field_, std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatFunc& s) {
  std::vector<RatFunc> c = a.c_;
  for (auto& x : c) x *= s;
  return RatPoly(a.field_, std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw FieldError("division by zero polynomial over k(y)");
  RatPoly r = *this;
  if (r.degree() < d.degree()) return {RatPoly(field_), r};
  std::vector<RatFunc> q(c_.size() - d.c_.size() + 1, RatFunc(field_));
  RatFunc inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    RatFunc f = r.leading() * inv;
    q[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= f * d.c_[i];
    r.trim();
  }
  return {RatPoly(field_, std::move(q)), r};
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

RatPoly RatPoly::derivative() const {
  std::vector<RatFunc> d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(c_[k] * RatFunc::constant(field_.from_int(static_cast<long>(k))));
  return RatPoly(field_, std::move(d));
}

RatPoly RatPoly::compose(const RatPoly& q) const {
  RatPoly acc(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * q + constant(c_[k]);
  return acc;
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[k].to_string() + ")";
    if (k > 0) s += "*x" + (k > 1 ? "^" + std::to_string(k) : std::string());
  }
  return s;
}

std::optional<RatPoly> inverse_mod(const RatPoly& a, const RatPoly& f) {
  const Field& k = f.field();
  RatPoly r0 = f, r1 = a % f;
  RatPoly t0(k), t1 = RatPoly::constant(RatFunc::constant(k.one()));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (t0 * r0.leading().inverse()) % f;
}

MobiusOverBase MobiusOverBase::identity(const Field& field) {
  RatFunc one = RatFunc::constant(field.one()), zero(field);
  return {one, zero, zero, one};
}

MobiusOverBase MobiusOverBase::cleared() const {
  UPoly l = alpha.den();
  for (const RatFunc* r : {&beta, &gamma, &delta}) {
    UPoly g = gcd(l, r->den());
    l = (l * r->den()).divmod(g).first;
  }
  std::array<UPoly, 4> p{(alpha.num() * l).divmod(alpha.den()).first, (beta.num() * l).divmod(beta.den()).first,
                         (gamma.num() * l).divmod(gamma.den()).first, (delta.num() * l).divmod(delta.den()).first};
  UPoly g(alpha.field());
  for (const auto& x : p) g = gcd(g, x);
  if (g.degree() > 0)
    for (auto& x : p) x = x.divmod(g).first;
  // Scale so the first nonzero leading coefficient is 1.
  for (const auto& x : p)
    if (!x.is_zero()) {
      FieldElement inv = x.leading().inverse();
      for (auto& y : p) y = y * inv;
      break;
    }
  return {RatFunc(p[0]), RatFunc(p[1]), RatFunc(p[2]), RatFunc(p[3])};
}

bool MobiusOverBase::proportional_to(const MobiusOverBase& o) const {
  std::array<const RatFunc*, 4> a{&alpha, &beta, &gamma, &delta}, b{&o.alpha, &o.beta, &o.gamma, &o.delta};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!(*a[i] * *b[j] == *a[j] * *b[i])) return false;
  bool nz_a = false, nz_b = false;
  for (std::size_t i = 0; i < 4; ++i) {
    nz_a |= !a[i]->is_zero();
    nz_b |= !b[i]->is_zero();
  }
  return nz_a && nz_b;
}

std::array<std::string, 4> MobiusOverBase::to_strings(const std::string& var) const {
  return {alpha.to_string(var), beta.to_string(var), gamma.to_string(var), delta.to_string(var)};
}

}  // namespace galcrem
