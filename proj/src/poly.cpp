#include "galcrem/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace galcrem {

namespace {

std::uint32_t total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  std::uint32_t ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return b < a;
}

MultiPoly::MultiPoly(Field field, VarList vars)
    : field_(std::move(field)), vars_(std::make_shared<const VarList>(std::move(vars))) {}

MultiPoly MultiPoly::constant(const Field& field, const VarList& vars, const FieldElement& c) {
  MultiPoly p(field, vars);
  p.add_term(Exponent(vars.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Field& field, const VarList& vars, const std::string& name) {
  MultiPoly p(field, vars);
  Exponent e(vars.size(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, field.one());
  return p;
}

MultiPoly MultiPoly::monomial(const Field& field, const VarList& vars, Exponent e, const FieldElement& c) {
  MultiPoly p(field, vars);
  if (e.size() != vars.size()) throw PolyError("exponent length mismatch");
  p.add_term(e, c);
  return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) throw PolyError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_->begin());
}

bool MultiPoly::has_var(const std::string& name) const {
  return std::find(vars_->begin(), vars_->end(), name) != vars_->end();
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0); }

FieldElement MultiPoly::constant_term() const { return coefficient(Exponent(nvars(), 0)); }

FieldElement MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return kNegInfDegree;
  return static_cast<int>(total(terms_.begin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return kNegInfDegree;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return static_cast<int>(d);
}

int MultiPoly::low_degree() const {
  if (terms_.empty()) return kNegInfDegree;
  return static_cast<int>(total(terms_.rbegin()->first));
}

bool MultiPoly::is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw PolyError("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const FieldElement& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw PolyError("leading term of the zero polynomial");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_)) throw PolyError("polynomials over different fields");
  if (vars_ != o.vars_ && *vars_ != *o.vars_) throw PolyError("polynomials over different variables");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.field_, {});
  r.vars_ = a.vars_;
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.field_ == b.field_) || a.vars() != b.vars() || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, vars(), field_.one());
  result.vars_ = vars_;
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::exact_div(const MultiPoly& d) const {
  check_compatible(d);
  if (d.is_zero()) throw PolyError("division by the zero polynomial");
  MultiPoly q(field_, {});
  q.vars_ = vars_;
  MultiPoly r = *this;
  const Exponent& ld = d.leading_exponent();
  FieldElement inv = d.leading_coefficient().inverse();
  Exponent shift(nvars());
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    if (!divides(ld, lr)) return std::nullopt;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lr[i] - ld[i];
    FieldElement f = r.leading_coefficient() * inv;
    q.add_term(shift, f);
    Exponent e(nvars());
    for (const auto& [ed, cd] : d.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ed[i] + shift[i];
      r.add_term(e, -(f * cd));
    }
  }
  return q;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
  auto q = exact_div(d);
  if (!q) throw PolyError("exact division leaves a nonzero remainder");
  return *q;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(field_, {});
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, c * field_.from_int(static_cast<long>(e[var])));
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const {
  if (assignment.empty()) return *this;
  const MultiPoly& sample = assignment.begin()->second;
  std::vector<const MultiPoly*> images(nvars(), nullptr);
  std::vector<MultiPoly> own;
  own.reserve(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = assignment.find((*vars_)[i]);
    if (it != assignment.end()) {
      it->second.check_compatible(sample);
      images[i] = &it->second;
    } else if (depends_on(i)) {
      if (!sample.has_var((*vars_)[i]))
        throw PolyError("variable '" + (*vars_)[i] + "' has no image in substitution");
      own.push_back(variable(field_, sample.vars(), (*vars_)[i]));
      images[i] = &own.back();
    }
  }
  MultiPoly result(sample.field(), {});
  result.vars_ = sample.vars_;
  // Cache powers of each image.
  std::vector<std::vector<MultiPoly>> powers(nvars());
  MultiPoly one = constant(sample.field(), sample.vars(), sample.field().one());
  one.vars_ = sample.vars_;
  auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one);
    while (cache.size() <= k) cache.push_back(cache.back() * *images[i]);
    return cache[k];
  };
  for (const auto& [e, c] : terms_) {
    MultiPoly term = one;
    term *= c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars()) throw PolyError("composition needs one image per variable");
  std::map<std::string, MultiPoly> a;
  for (std::size_t i = 0; i < images.size(); ++i) a.emplace((*vars_)[i], images[i]);
  return substitute(a);
}

MultiPoly MultiPoly::evaluate(std::size_t var, const FieldElement& value) const {
  MultiPoly r(field_, {});
  r.vars_ = vars_;
  std::vector<FieldElement> powers{field_.one()};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c * powers[e[var]]);
  }
  return r;
}

FieldElement MultiPoly::evaluate_all(const std::vector<FieldElement>& point) const {
  if (point.size() != nvars()) throw PolyError("point dimension mismatch");
  FieldElement acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::rename(const VarList& names) const {
  if (names.size() != nvars()) throw PolyError("rename needs one name per variable");
  MultiPoly r(field_, names);
  r.terms_ = terms_;
  return r;
}

MultiPoly MultiPoly::embed(const VarList& target) const {
  MultiPoly r(field_, target);
  std::vector<std::size_t> map(nvars(), target.size());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target.begin(), target.end(), (*vars_)[i]);
    if (it != target.end()) map[i] = static_cast<std::size_t>(it - target.begin());
    else if (depends_on(i)) throw PolyError("variable '" + (*vars_)[i] + "' missing from target list");
  }
  for (const auto& [e, c] : terms_) {
    Exponent f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) f[map[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<MultiPoly> out;
  if (is_zero()) return out;
  MultiPoly zero(field_, {});
  zero.vars_ = vars_;
  out.assign(static_cast<std::size_t>(degree_in(var)) + 1, zero);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var) {
  if (coeffs.empty()) throw PolyError("empty coefficient list");
  MultiPoly r(coeffs[0].field_, {});
  r.vars_ = coeffs[0].vars_;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    r.check_compatible(coeffs[k]);
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponent f = e;
      f[var] += static_cast<std::uint32_t>(k);
      r.add_term(f, c);
    }
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  MultiPoly r = *this;
  r *= leading_coefficient().inverse();
  return r;
}

MultiPoly MultiPoly::content_normalized() const {
  if (is_zero()) return *this;
  if (field_.characteristic() != 0) return monic();
  std::vector<mpq_class> q;
  q.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    auto v = c.rational_value();
    if (!v) return monic();
    q.push_back(*v);
  }
  mpz_class den = 1, num = 0;
  for (const auto& x : q) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num().get_mpz_t());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  if (q.front() < 0) scale = -scale;
  MultiPoly r = *this;
  r *= field_.from_rational(scale);
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = false;
    FieldElement a = c;
    if (c.is_atomic()) {
      std::string s = c.to_string();
      if (!s.empty() && s[0] == '-') {
        neg = true;
        a = -c;
      }
    }
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = a.is_atomic() ? a.to_string() : "(" + a.to_string() + ")";
    if (mono.empty()) os << coef;
    else if (a.is_one()) os << mono;
    else os << coef << "*" << mono;
  }
  return os.str();
}

MultiPoly homogenize(const MultiPoly& p, const std::string& var, int degree) {
  if (!p.is_zero() && degree < p.degree())
    throw PolyError("homogenization degree " + std::to_string(degree) + " below polynomial degree " +
                    std::to_string(p.degree()));
  if (p.has_var(var)) throw PolyError("homogenizing variable '" + var + "' already present");
  VarList vars = p.vars();
  vars.push_back(var);
  MultiPoly r(p.field(), vars);
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    std::uint32_t t = std::accumulate(e.begin(), e.end(), std::uint32_t{0});
    f.push_back(static_cast<std::uint32_t>(degree) - t);
    r.add_term(f, c);
  }
  return r;
}

MultiPoly dehomogenize(const MultiPoly& p, const std::string& var) {
  std::size_t idx = p.var_index(var);
  VarList vars = p.vars();
  vars.erase(vars.begin() + static_cast<long>(idx));
  MultiPoly r(p.field(), vars);
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f.erase(f.begin() + static_cast<long>(idx));
    r.add_term(f, c);
  }
  return r;
}

}  // namespace galcrem
