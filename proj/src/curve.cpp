#include "galcrem/curve.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "galcrem/univariate.hpp"

namespace galcrem {

const VarList& plane_vars() {
  static const VarList v{"X", "Y", "Z"};
  return v;
}

const VarList& line_vars() {
  static const VarList v{"u", "v"};
  return v;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::yes:
      return "true";
    case CertStatus::no:
      return "false";
    case CertStatus::undetermined:
      return "undetermined";
  }
  return "?";
}

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(const FieldElement& x, const FieldElement& y, const FieldElement& z) : c_{x, y, z} {
  std::size_t i = 0;
  while (i < 3 && c_[i].is_zero()) ++i;
  if (i == 3) throw CurveError("not a projective point");
  FieldElement inv = c_[i].inverse();
  for (auto& e : c_) e *= inv;
}

ProjPoint ProjPoint::from_vector(const std::vector<FieldElement>& v) {
  if (v.size() != 3) throw CurveError("a plane point needs three coordinates");
  return ProjPoint(v[0], v[1], v[2]);
}

ProjPoint ProjPoint::coordinate(const Field& field, std::size_t i) {
  std::vector<FieldElement> v(3, field.zero());
  v[i] = field.one();
  return from_vector(v);
}

std::size_t ProjPoint::pivot() const {
  std::size_t i = 0;
  while (c_[i].is_zero()) ++i;
  return i;
}

std::string ProjPoint::to_string() const {
  return "[" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + "]";
}

// ---------------------------------------------------------------- Parametrization

Parametrization::Parametrization(std::array<MultiPoly, 3> comps) : comps_(std::move(comps)) {
  const Field& k = comps_[0].field();
  for (auto& c : comps_) {
    if (!(c.field() == k)) throw CurveError("parametrization components over different fields");
    c = c.embed(line_vars());
    if (!c.is_homogeneous()) throw CurveError("parametrization component is not a binary form: " + c.to_string());
  }
  int deg = kNegInfDegree;
  for (const auto& c : comps_) {
    if (c.is_zero()) continue;
    if (deg != kNegInfDegree && c.degree() != deg) throw CurveError("parametrization components differ in degree");
    deg = c.degree();
  }
  if (deg == kNegInfDegree) throw CurveError("all parametrization components vanish");
  MultiPoly g(k, line_vars());
  for (const auto& c : comps_) g = gcd_forms(g, c);
  if (g.degree() > 0)
    for (auto& c : comps_)
      if (!c.is_zero()) c = c.divide_exact(g);
  degree_ = deg - g.degree();
  // Image is a point when the coefficient vectors have rank 1.
  Matrix coeffs(k, 3, static_cast<std::size_t>(degree_) + 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& [e, c] : comps_[i].terms()) coeffs(i, e[1]) = c;
  bool point = coeffs.rank() < 2;
  if (point || degree_ == 0) throw CurveError("parametrization image is a point");
}

std::array<MultiPoly, 3> Parametrization::precompose(const LineMobius& g) const {
  return {g.act_on(comps_[0]), g.act_on(comps_[1]), g.act_on(comps_[2])};
}

Parametrization Parametrization::transformed(const Matrix& m) const {
  std::array<MultiPoly, 3> out{MultiPoly(field(), line_vars()), MultiPoly(field(), line_vars()),
                               MultiPoly(field(), line_vars())};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) out[i] += comps_[j] * m(i, j);
  return Parametrization(out);
}

ProjPoint Parametrization::at(const FieldElement& s, const FieldElement& t) const {
  return ProjPoint(comps_[0].evaluate_all({s, t}), comps_[1].evaluate_all({s, t}), comps_[2].evaluate_all({s, t}));
}

// ---------------------------------------------------------------- PlaneCurve

PlaneCurve PlaneCurve::from_implicit(const MultiPoly& F, bool irreducible_trusted) {
  MultiPoly G = F.embed(plane_vars());
  if (G.is_zero()) throw CurveError("zero polynomial does not define a curve");
  if (!G.is_homogeneous()) throw CurveError("curve equation is not homogeneous");
  if (G.degree() < 1) throw CurveError("curve equation has degree 0");
  PlaneCurve c(G.field());
  c.implicit_ = G.content_normalized();
  c.degree_ = G.degree();
  c.irreducible_trusted_ = irreducible_trusted;
  return c;
}

PlaneCurve PlaneCurve::from_parametrization(const Parametrization& phi, bool birational_trusted, std::uint64_t seed) {
  PlaneCurve c(phi.field());
  c.param_ = phi;
  c.degree_ = phi.degree();
  c.birational_trusted_ = birational_trusted;
  c.seed_ = seed;
  return c;
}

PlaneCurve PlaneCurve::from_both(const MultiPoly& F, const Parametrization& phi) {
  PlaneCurve c = from_implicit(F);
  if (!c.implicit_->compose({phi[0], phi[1], phi[2]}).is_zero())
    throw CurveError("parametrization does not lie on the implicit curve");
  c.param_ = phi;
  return c;
}

const MultiPoly& PlaneCurve::implicit() const {
  if (implicit_) return *implicit_;
  std::call_once(cache_->once, [this] { cache_->value = implicitize(*param_, seed_); });
  return *cache_->value;
}

bool PlaneCurve::has_implicit_cached() const { return implicit_.has_value() || cache_->value.has_value(); }

bool PlaneCurve::contains(const ProjPoint& p) const { return implicit().evaluate_all(p.to_vector()).is_zero(); }

// ---------------------------------------------------------------- implicitization

namespace {

// Coefficients of a binary form of formal degree n, u^n first.
std::vector<FieldElement> form_coeffs(const MultiPoly& f, int n) {
  std::vector<FieldElement> out(static_cast<std::size_t>(n) + 1, f.field().zero());
  for (const auto& [e, c] : f.terms()) out[e[1]] = c;
  return out;
}

FieldElement sylvester_det(const std::vector<FieldElement>& p, const std::vector<FieldElement>& q, const Field& k) {
  std::size_t m = p.size() - 1, n = q.size() - 1;
  Matrix s(k, m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = p[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = q[j];
  return s.determinant();
}

}  // namespace

MultiPoly implicitize(const Parametrization& phi, std::uint64_t seed) {
  const Field& k = phi.field();
  int n = phi.degree();
  if (k.characteristic() != 0 && !k.has_at_least(static_cast<std::uint64_t>(2 * n + 2)))
    throw CurveError("field too small to interpolate a degree " + std::to_string(n) + " curve");
  auto c1 = form_coeffs(phi[0], n), c2 = form_coeffs(phi[1], n), c3 = form_coeffs(phi[2], n);
  auto res_at = [&](const FieldElement& x, const FieldElement& y) {
    std::vector<FieldElement> p(c1.size(), k.zero()), q(c1.size(), k.zero());
    for (std::size_t i = 0; i < c1.size(); ++i) {
      p[i] = x * c3[i] - c1[i];
      q[i] = y * c3[i] - c2[i];
    }
    return sylvester_det(p, q, k);
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> off(-50, 50);
  long x0 = off(rng), y0 = off(rng);
  std::vector<std::pair<unsigned, unsigned>> monos;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) monos.emplace_back(a, b);
  Matrix v(k, monos.size(), monos.size());
  std::vector<FieldElement> rhs;
  std::size_t row = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j, ++row) {
      FieldElement x = k.from_int(x0 + i), y = k.from_int(y0 + j);
      for (std::size_t col = 0; col < monos.size(); ++col) v(row, col) = x.pow(monos[col].first) * y.pow(monos[col].second);
      rhs.push_back(res_at(x, y));
    }
  auto sol = v.solve(rhs);
  if (!sol) throw CurveError("implicitization interpolation system is inconsistent");
  MultiPoly F(k, plane_vars());
  for (std::size_t col = 0; col < monos.size(); ++col) {
    auto [a, b] = monos[col];
    F.add_term({a, b, static_cast<std::uint32_t>(n) - a - b}, (*sol)[col]);
  }
  if (F.is_zero()) throw CurveError("implicitization produced the zero polynomial");
  // An extra sample guards the degree assumption; F o phi = 0 is the real check.
  FieldElement xe = k.from_int(x0 + n + 3), ye = k.from_int(y0 - 7);
  if (!(F.evaluate_all({xe, ye, k.one()}) == res_at(xe, ye)) || !F.compose({phi[0], phi[1], phi[2]}).is_zero())
    throw CurveError("implicitization failed verification (parametrization not birational onto its image?)");
  return F.content_normalized();
}

// ---------------------------------------------------------------- multiplicities

namespace {

// F(T X) where T has columns (p, e_j, e_k) with p's pivot at index i.
MultiPoly translate_to_coordinate_point(const MultiPoly& F, const ProjPoint& p, std::size_t& pivot) {
  pivot = p.pivot();
  const Field& k = F.field();
  std::array<MultiPoly, 3> img{MultiPoly::variable(k, plane_vars(), "X"), MultiPoly::variable(k, plane_vars(), "Y"),
                               MultiPoly::variable(k, plane_vars(), "Z")};
  MultiPoly xi = img[pivot];
  for (std::size_t j = 0; j < 3; ++j)
    if (j != pivot && !p[j].is_zero()) img[j] += xi * p[j];
  return F.compose({img[0], img[1], img[2]});
}

}  // namespace

unsigned multiplicity_implicit(const MultiPoly& F0, const ProjPoint& p) {
  MultiPoly F = F0.embed(plane_vars());
  std::size_t i = 0;
  MultiPoly G = translate_to_coordinate_point(F, p, i);
  int top = G.degree_in(i);
  return static_cast<unsigned>(G.degree() - top);
}

unsigned multiplicity_implicit(const PlaneCurve& c, const ProjPoint& p) { return multiplicity_implicit(c.implicit(), p); }

MultiPoly line_through(const ProjPoint& p, const ProjPoint& q) {
  const Field& k = p.field();
  FieldElement a = p[1] * q[2] - p[2] * q[1];
  FieldElement b = p[2] * q[0] - p[0] * q[2];
  FieldElement c = p[0] * q[1] - p[1] * q[0];
  MultiPoly L(k, plane_vars());
  L.add_term({1, 0, 0}, a);
  L.add_term({0, 1, 0}, b);
  L.add_term({0, 0, 1}, c);
  return L;
}

unsigned multiplicity_param(const Parametrization& phi, const ProjPoint& p, unsigned trials, std::uint64_t seed) {
  const Field& k = phi.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-5, 5);
  auto random_point = [&] { return std::vector<FieldElement>{k.from_int(dist(rng)), k.from_int(dist(rng)), k.from_int(dist(rng))}; };
  unsigned best = UINT32_MAX;
  unsigned done = 0;
  for (unsigned attempt = 0; done < std::max(1u, trials) && attempt < 200 * std::max(1u, trials); ++attempt) {
    auto q1 = random_point(), q2 = random_point();
    Matrix m = Matrix::from_rows(k, {p.to_vector(), q1, q2});
    if (m.determinant().is_zero()) continue;
    MultiPoly L1 = line_through(p, ProjPoint::from_vector(q1)), L2 = line_through(p, ProjPoint::from_vector(q2));
    MultiPoly a = L1.compose({phi[0], phi[1], phi[2]}), b = L2.compose({phi[0], phi[1], phi[2]});
    if (a.is_zero() || b.is_zero()) return 1;  // the curve is one of these lines through p
    int g = gcd_forms(a, b).degree();
    best = std::min(best, static_cast<unsigned>(g));
    ++done;
  }
  if (done == 0) throw CurveError("could not sample independent lines (field too small)");
  return best;
}

Matrix move_to_e1(const ProjPoint& p) {
  const Field& k = p.field();
  std::size_t i = p.pivot();
  Matrix inv(k, 3, 3);  // columns p, e_j, e_k
  std::size_t col = 1;
  for (std::size_t r = 0; r < 3; ++r) inv(r, 0) = p[r];
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == i) continue;
    inv(j, col++) = k.one();
  }
  return *inv.inverse();
}

Matrix random_invertible(const Field& field, std::uint64_t seed, long range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-range, range);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m(field, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = field.from_int(dist(rng));
    if (!m.determinant().is_zero()) return m;
  }
  throw CurveError("could not sample an invertible matrix");
}

// ---------------------------------------------------------------- multiplicity certificate

namespace {

// Roots in the ground field that can be found cheaply: small rational roots
// for characteristic 0 (coefficients must be rational), all roots for small
// prime fields.
std::vector<FieldElement> findable_roots(const UPoly& p) {
  std::vector<FieldElement> out;
  const Field& k = p.field();
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    out.push_back(-p.coeff(0) / p.coeff(1));
    return out;
  }
  if (k.kind() == FieldKind::prime) {
    std::uint64_t q = k.descriptor().modulus;
    if (q > 200000) return out;
    for (std::uint64_t r = 0; r < q; ++r) {
      FieldElement x = k.from_mpz(mpz_class(std::to_string(r)));
      if (p(x).is_zero()) out.push_back(x);
    }
    return out;
  }
  // Clear denominators and use the rational root test with bounded divisors.
  std::vector<mpq_class> q;
  for (const auto& c : p.coeffs()) {
    auto v = c.rational_value();
    if (!v) return out;
    q.push_back(*v);
  }
  mpz_class l = 1;
  for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& x : q) z.push_back(mpz_class(x * l));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) out.push_back(k.zero());
  auto divisors = [](mpz_class n) {
    std::vector<mpz_class> d;
    n = abs(n);
    if (n > mpz_class("1000000000000")) return d;
    for (mpz_class i = 1; i * i <= n && i <= 1000000; ++i)
      if (n % i == 0) {
        d.push_back(i);
        d.push_back(n / i);
      }
    return d;
  };
  auto dp = divisors(z[low]), dq = divisors(z.back());
  std::set<mpq_class> seen;
  for (const auto& a : dp)
    for (const auto& b : dq)
      for (int s : {1, -1}) {
        mpq_class r(a * s, b);
        r.canonicalize();
        if (!seen.insert(r).second) continue;
        FieldElement x = k.from_rational(r);
        if (p(x).is_zero()) out.push_back(x);
      }
  return out;
}

}  // namespace

MultiplicityCertificate has_point_of_multiplicity_ge(const PlaneCurve& c, unsigned m, std::uint64_t seed,
                                                     const std::vector<ProjPoint>& hints, std::stop_token st) {
  const Field& k = c.field();
  const int d = c.degree();
  if (k.characteristic() != 0 && k.characteristic() <= static_cast<std::uint64_t>(d))
    throw CurveError("multiplicity certificate needs characteristic 0 or larger than the degree");
  const MultiPoly& F = c.implicit();
  MultiplicityCertificate cert;
  cert.m = m;
  // Direct checks first: coordinate points and caller hints.
  std::vector<ProjPoint> direct;
  for (std::size_t i = 0; i < 3; ++i) direct.push_back(ProjPoint::coordinate(k, i));
  direct.insert(direct.end(), hints.begin(), hints.end());
  for (const auto& p : direct) {
    unsigned mult = multiplicity_implicit(F, p);
    if (mult >= m) {
      cert.status = CertStatus::yes;
      cert.witness = p;
      cert.witness_multiplicity = mult;
      cert.detail = "witness found by direct check";
      return cert;
    }
  }
  if (m == 0) {
    cert.status = CertStatus::yes;
    cert.witness = direct.front();
    return cert;
  }
  if (static_cast<int>(m) > d) {
    cert.status = CertStatus::no;
    cert.detail = "multiplicity exceeds the degree";
    return cert;
  }
  const unsigned order = m - 1;
  const int e = d - static_cast<int>(order);
  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    check_stop(st);
    Matrix T = random_invertible(k, seed + 7919 * attempt, 4);
    std::array<MultiPoly, 3> img{MultiPoly(k, plane_vars()), MultiPoly(k, plane_vars()), MultiPoly(k, plane_vars())};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (!T(i, j).is_zero()) img[i] += MultiPoly::variable(k, plane_vars(), plane_vars()[j]) * T(i, j);
    MultiPoly G = F.compose({img[0], img[1], img[2]});
    // All partial derivatives of order m - 1.
    std::vector<MultiPoly> parts;
    for (unsigned a = 0; a <= order; ++a)
      for (unsigned b = 0; a + b <= order; ++b) {
        MultiPoly h = G;
        for (unsigned s = 0; s < a; ++s) h = h.derivative(0);
        for (unsigned s = 0; s < b; ++s) h = h.derivative(1);
        for (unsigned s = 0; s < order - a - b; ++s) h = h.derivative(2);
        if (!h.is_zero()) parts.push_back(h);
      }
    bool generic = !parts.empty();
    for (const auto& h : parts)
      if (h.coefficient({0, 0, static_cast<std::uint32_t>(e)}).is_zero()) generic = false;
    if (!generic) continue;
    cert.transform = T;
    cert.partials = static_cast<unsigned>(parts.size());
    cert.resultant_degree = e * e;
    if (parts.size() == 1 || e == 0) {
      cert.detail = "fewer than two independent partial derivatives";
      return cert;
    }
    // Running gcd of Res_Z(G_i, G_j) as binary forms in X, Y.
    const VarList xz{"X", "Z"};
    MultiPoly g(k, {"X", "Y"});
    bool have = false;
    for (std::size_t i = 0; i < parts.size() && !(have && g.degree() == 0); ++i)
      for (std::size_t j = i + 1; j < parts.size() && !(have && g.degree() == 0); ++j) {
        check_stop(st);
        MultiPoly a = parts[i].evaluate(1, k.one()), b = parts[j].evaluate(1, k.one());
        MultiPoly r = resultant(dehomogenize(a, "Y"), dehomogenize(b, "Y"), "Z");
        ++cert.resultants_used;
        if (r.is_zero()) continue;
        MultiPoly rx = dehomogenize(r, "Z");
        MultiPoly form = homogenize(rx, "Y", e * e);
        g = have ? gcd_forms(g, form) : form.monic();
        have = true;
      }
    if (!have) {
      cert.detail = "all pairwise resultants vanish";
      return cert;
    }
    cert.gcd_degree = g.degree();
    if (g.degree() == 0) {
      cert.status = CertStatus::no;
      cert.detail = "pairwise resultants of the order-" + std::to_string(order) + " partials have gcd 1";
      return cert;
    }
    // Candidate X:Y ratios from the gcd, then Z from the partials.
    std::vector<std::pair<FieldElement, FieldElement>> ratios;
    if (g.coefficient({static_cast<std::uint32_t>(g.degree()), 0}).is_zero()) ratios.emplace_back(k.one(), k.zero());
    for (const auto& r : findable_roots(UPoly::from_multi(dehomogenize(g, "Y"), 0))) ratios.emplace_back(r, k.one());
    for (const auto& [xa, yb] : ratios) {
      MultiPoly h = parts[0].evaluate(0, xa).evaluate(1, yb);
      for (const auto& z : findable_roots(UPoly::from_multi(h, 2))) {
        ProjPoint q(xa, yb, z);
        if (multiplicity_implicit(G, q) >= m) {
          ProjPoint orig = ProjPoint::from_vector(T * q.to_vector());
          cert.status = CertStatus::yes;
          cert.witness = orig;
          cert.witness_multiplicity = multiplicity_implicit(F, orig);
          cert.detail = "witness recovered from the elimination";
          return cert;
        }
      }
    }
    cert.detail = "common factor of degree " + std::to_string(g.degree()) + " without a ground-field witness";
    return cert;
  }
  cert.detail = "no generic coordinate change found";
  return cert;
}

}  // namespace galcrem
