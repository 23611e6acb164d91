#include "galcrem/maps.hpp"

namespace galcrem {

namespace {

MultiPoly var(const Field& k, const char* name) { return MultiPoly::variable(k, plane_vars(), name); }

std::array<MultiPoly, 3> xyz(const Field& k) { return {var(k, "X"), var(k, "Y"), var(k, "Z")}; }

std::array<MultiPoly, 3> apply_matrix(const Matrix& m, const std::array<MultiPoly, 3>& v) {
  const Field& k = m.field();
  std::array<MultiPoly, 3> out{MultiPoly(k, v[0].vars()), MultiPoly(k, v[0].vars()), MultiPoly(k, v[0].vars())};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) out[i] += v[j] * m(i, j);
  return out;
}

}  // namespace

PlaneRationalMap::PlaneRationalMap(std::array<MultiPoly, 3> comps) : comps_(std::move(comps)) {
  const Field& k = comps_[0].field();
  int deg = kNegInfDegree;
  for (auto& c : comps_) {
    if (!(c.field() == k)) throw MapError("map components over different fields");
    c = c.embed(plane_vars());
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw MapError("map component is not homogeneous: " + c.to_string());
    if (deg != kNegInfDegree && c.degree() != deg) throw MapError("map components differ in degree");
    deg = c.degree();
  }
  if (deg == kNegInfDegree) throw MapError("all map components vanish");
  MultiPoly g(k, plane_vars());
  for (const auto& c : comps_) g = poly_gcd(g, c);
  if (g.degree() > 0)
    for (auto& c : comps_)
      if (!c.is_zero()) c = c.divide_exact(g);
  for (const auto& c : comps_)
    if (!c.is_zero()) {
      FieldElement lc = c.leading_coefficient().inverse();
      for (auto& d : comps_) d *= lc;
      break;
    }
}

PlaneRationalMap PlaneRationalMap::linear(const Matrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw MapError("linear map needs a 3x3 matrix");
  if (m.determinant().is_zero()) throw MapError("singular matrix");
  return PlaneRationalMap(apply_matrix(m, xyz(m.field())));
}

PlaneRationalMap PlaneRationalMap::identity(const Field& field) { return PlaneRationalMap(xyz(field)); }

PlaneRationalMap PlaneRationalMap::standard_quadratic(const Field& field) {
  auto [X, Y, Z] = xyz(field);
  return PlaneRationalMap({Y * Z, X * Z, X * Y});
}

int PlaneRationalMap::degree() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return c.degree();
  return kNegInfDegree;
}

Matrix PlaneRationalMap::matrix() const {
  if (degree() != 1) throw MapError("map is not linear");
  Matrix m(field(), 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[j] = 1;
      m(i, j) = comps_[i].coefficient(e);
    }
  return m;
}

MultiPoly PlaneRationalMap::pull_back(const MultiPoly& F) const {
  return F.embed(plane_vars()).compose({comps_[0], comps_[1], comps_[2]});
}

std::array<MultiPoly, 3> PlaneRationalMap::on(const std::array<MultiPoly, 3>& param) const {
  std::vector<MultiPoly> img{param[0], param[1], param[2]};
  return {comps_[0].compose(img), comps_[1].compose(img), comps_[2].compose(img)};
}

std::array<std::string, 3> PlaneRationalMap::to_strings() const {
  return {comps_[0].to_string(), comps_[1].to_string(), comps_[2].to_string()};
}

PlaneRationalMap map_compose(const PlaneRationalMap& g, const PlaneRationalMap& f) {
  std::vector<MultiPoly> img{f[0], f[1], f[2]};
  std::array<MultiPoly, 3> c{g[0].compose(img), g[1].compose(img), g[2].compose(img)};
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) throw MapError("composition is degenerate");
  return PlaneRationalMap(c);
}

std::optional<ProjPoint> map_apply(const PlaneRationalMap& f, const ProjPoint& p) {
  auto v = p.to_vector();
  FieldElement a = f[0].evaluate_all(v), b = f[1].evaluate_all(v), c = f[2].evaluate_all(v);
  if (a.is_zero() && b.is_zero() && c.is_zero()) return std::nullopt;
  return ProjPoint(a, b, c);
}

bool proportional_eq(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g) {
  if (f.size() != g.size()) throw MapError("proportionality test needs tuples of equal length");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!(f[i] * g[j] - f[j] * g[i]).is_zero()) return false;
  return true;
}

PlaneCurve linear_pushforward(const PlaneCurve& c, const Matrix& m) {
  auto inv = m.inverse();
  if (!inv) throw MapError("singular matrix");
  std::optional<Parametrization> phi;
  if (c.param()) phi = c.param()->transformed(m);
  if (phi && !c.has_implicit_cached()) return PlaneCurve::from_parametrization(*phi, c.birational_trusted());
  auto img = apply_matrix(*inv, xyz(m.field()));
  MultiPoly G = c.implicit().compose({img[0], img[1], img[2]});
  if (phi) return PlaneCurve::from_both(G, *phi);
  return PlaneCurve::from_implicit(G, c.irreducible_trusted());
}

QuadraticPushforward std_quadratic_pushforward(const PlaneCurve& c) {
  const Field& k = c.field();
  const MultiPoly& F = c.implicit();
  if (F.degree() == 1 && F.size() == 1) throw MapError("a coordinate line is contracted to a point");
  QuadraticPushforward out{c, {0, 0, 0}, 0, {}};
  int d = F.degree();
  for (std::size_t i = 0; i < 3; ++i) out.multiplicities[i] = multiplicity_implicit(F, ProjPoint::coordinate(k, i));
  const auto& m = out.multiplicities;
  out.expected_degree = 2 * d - static_cast<int>(m[0] + m[1] + m[2]);

  auto [X, Y, Z] = xyz(k);
  MultiPoly G = F.compose({Y * Z, X * Z, X * Y});
  Exponent e{m[0], m[1], m[2]};
  G = G.divide_exact(MultiPoly::monomial(k, plane_vars(), e, k.one()));
  if (G.degree() != out.expected_degree) throw MapError("strict transform has unexpected degree");

  std::optional<Parametrization> phi;
  if (c.param()) {
    auto t = PlaneRationalMap::standard_quadratic(k).on(c.param()->components());
    phi = Parametrization(t);
  }
  out.image = phi ? PlaneCurve::from_both(G, *phi) : PlaneCurve::from_implicit(G, c.irreducible_trusted());
  for (std::size_t i = 0; i < 3; ++i) {
    int mult = d - static_cast<int>(m[(i + 1) % 3] + m[(i + 2) % 3]);
    out.contractions.push_back({i, ProjPoint::coordinate(k, i), static_cast<unsigned>(std::max(mult, 0))});
  }
  return out;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::witness: return "witness";
    case Decision::refuted: return "refuted";
    case Decision::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::array<MultiPoly, 2> projection_forms(const ProjPoint& p) {
  Matrix m = move_to_e1(p);
  auto l = apply_matrix(m, xyz(p.field()));
  return {l[1], l[2]};
}

JonquieresResult jonquieres_decompose(const PlaneRationalMap& f, const ProjPoint& p) {
  const Field& k = f.field();
  JonquieresResult out;
  Matrix m = move_to_e1(p);
  Matrix minv = *m.inverse();
  auto back = apply_matrix(minv, xyz(k));
  std::array<MultiPoly, 3> moved{f[0].compose({back[0], back[1], back[2]}), f[1].compose({back[0], back[1], back[2]}),
                                 f[2].compose({back[0], back[1], back[2]})};
  auto g = apply_matrix(m, moved);  // M f M^-1

  if (g[1].is_zero() && g[2].is_zero()) {
    out.decision = Decision::refuted;
    out.reason = "map sends the plane into the center";
    return out;
  }
  MultiPoly h = poly_gcd(g[1], g[2]);
  MultiPoly b1 = g[1].is_zero() ? g[1] : g[1].divide_exact(h);
  MultiPoly b2 = g[2].is_zero() ? g[2] : g[2].divide_exact(h);
  std::size_t xi = 0;
  if (b1.depends_on(xi) || b2.depends_on(xi)) {
    out.decision = Decision::refuted;
    out.reason = "projection of the image depends on the fiber coordinate";
    return out;
  }
  if (std::max(b1.degree(), b2.degree()) != 1) {
    out.decision = Decision::refuted;
    out.reason = "induced map on the pencil is not an automorphism";
    return out;
  }
  auto coeff = [&](const MultiPoly& q, std::size_t j) {
    Exponent e{0, 0, 0};
    e[j] = 1;
    return q.coefficient(e);
  };
  if (coeff(b1, 1) * coeff(b2, 2) == coeff(b1, 2) * coeff(b2, 1)) {
    out.decision = Decision::refuted;
    out.reason = "induced map on the pencil is constant";
    return out;
  }
  LineMobius alpha(coeff(b1, 1), coeff(b1, 2), coeff(b2, 1), coeff(b2, 2));

  // Fiber coordinate x = X/Z over the base y = Y/Z.
  MultiPoly num = dehomogenize(g[0], "Z"), den = dehomogenize(g[2], "Z");
  if (den.is_zero()) {
    out.decision = Decision::undetermined;
    out.reason = "image lies in the line at infinity of the chart";
    return out;
  }
  MultiPoly c = poly_gcd(num, den);
  if (!num.is_zero()) num = num.divide_exact(c);
  den = den.divide_exact(c);
  if (num.degree_in("X") > 1 || den.degree_in("X") > 1) {
    out.decision = Decision::undetermined;
    out.reason = "fiber map is not fractional-linear";
    return out;
  }
  std::size_t X = num.var_index("X"), Y = num.var_index("Y");
  auto nc = num.coefficients_in(X), dc = den.coefficients_in(X);
  auto rf = [&](const std::vector<MultiPoly>& cs, std::size_t i) {
    return i < cs.size() ? RatFunc(UPoly::from_multi(cs[i], Y)) : RatFunc(k);
  };
  MobiusOverBase fiber{rf(nc, 1), rf(nc, 0), rf(dc, 1), rf(dc, 0)};
  if (fiber.determinant().is_zero()) {
    out.decision = Decision::undetermined;
    out.reason = "fiber map is degenerate";
    return out;
  }
  out.decision = Decision::witness;
  out.witness = JonquieresWitness{alpha, fiber.cleared(), m};
  return out;
}

}  // namespace galcrem
