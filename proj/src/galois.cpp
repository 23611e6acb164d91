#include "galcrem/galois.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace galcrem {

namespace {

std::array<MultiPoly, 3> xyz(const Field& k) {
  const VarList& v = plane_vars();
  return {MultiPoly::variable(k, v, "X"), MultiPoly::variable(k, v, "Y"), MultiPoly::variable(k, v, "Z")};
}

std::array<MultiPoly, 3> apply_matrix(const Matrix& m, const std::array<MultiPoly, 3>& v) {
  const Field& k = m.field();
  std::array<MultiPoly, 3> out{MultiPoly(k, v[0].vars()), MultiPoly(k, v[0].vars()), MultiPoly(k, v[0].vars())};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) out[i] += v[j] * m(i, j);
  return out;
}

// p(r) for a polynomial in y and a rational function r.
RatFunc eval_at(const UPoly& p, const RatFunc& r) {
  RatFunc acc(p.field());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * r + RatFunc::constant(p.coeffs()[i]);
  return acc;
}

std::optional<FieldElement> eval_rf(const RatFunc& r, const FieldElement& t) { return r(t); }

// h(t) on the affine parameter, nullopt at infinity.
std::optional<FieldElement> act_affine(const LineMobius& h, const FieldElement& t) {
  FieldElement den = h.c() * t + h.d();
  if (den.is_zero()) return std::nullopt;
  return (h.a() * t + h.b()) / den;
}

std::string power_label(unsigned k) {
  if (k == 0) return "identity";
  if (k == 1) return "sigma";
  return "sigma^" + std::to_string(k);
}

}  // namespace

bool preserves_curve(const MultiPoly& F, const PlaneRationalMap& J) {
  MultiPoly G = J.pull_back(F);
  return !G.is_zero() && G.divisible_by(F.embed(plane_vars()));
}

bool restricts_to(const PlaneRationalMap& J, const Parametrization& phi, const LineMobius& g) {
  auto lhs = J.on(phi.components());
  auto rhs = phi.precompose(g);
  return proportional_eq({lhs[0], lhs[1], lhs[2]}, {rhs[0], rhs[1], rhs[2]});
}

bool pencil_preserved(const PlaneRationalMap& J, const ProjPoint& p) {
  auto l = projection_forms(p);
  return proportional_eq({J.pull_back(l[0]), J.pull_back(l[1])}, {l[0], l[1]});
}


UPoly affine_part(const MultiPoly& form) {
  MultiPoly f = form.embed(line_vars());
  std::vector<FieldElement> c;
  for (const auto& [e, a] : f.terms()) {
    if (c.size() <= e[0]) c.resize(e[0] + 1, form.field().zero());
    c[e[0]] = a;
  }
  return UPoly(form.field(), c);
}

// ---------------------------------------------------------------- projection

int ProjectionModel::base_degree() const {
  int best = 0;
  for (const auto& c : fiber_poly.coefficients_in(0)) best = std::max(best, c.degree());
  return best;
}

ProjectionModel projection_model(const PlaneCurve& c, const ProjPoint& p) {
  const Field& k = c.field();
  const MultiPoly& F = c.implicit();
  Matrix m = move_to_e1(p);
  auto back = apply_matrix(*m.inverse(), xyz(k));
  MultiPoly moved = F.compose({back[0], back[1], back[2]}).content_normalized();
  int d = moved.degree();
  int top = moved.degree_in(0);
  unsigned mult = static_cast<unsigned>(d - top);
  if (top == 0) throw GaloisError("the curve is a line through the center; the projection is constant");
  MultiPoly fiber = dehomogenize(moved, "Z").rename({"x", "y"});
  if (fiber.degree_in(0) != top) throw GaloisError("fiber polynomial lost degree in the chart");
  return ProjectionModel{c, p, m, moved, fiber, mult, static_cast<unsigned>(top)};
}

std::array<MultiPoly, 2> projection_on_line(const Parametrization& phi, const ProjPoint& p) {
  auto l = projection_forms(p);
  std::vector<MultiPoly> img{phi[0], phi[1], phi[2]};
  MultiPoly a = l[0].compose(img), b = l[1].compose(img);
  MultiPoly g = gcd_forms(a, b);
  if (g.degree() > 0) {
    if (!a.is_zero()) a = a.divide_exact(g);
    if (!b.is_zero()) b = b.divide_exact(g);
  }
  return {a, b};
}

bool deck_verify(const Parametrization& phi, const ProjPoint& p, const LineMobius& g) {
  auto psi = projection_on_line(phi, p);
  return proportional_eq({psi[0], psi[1]}, {g.act_on(psi[0]), g.act_on(psi[1])});
}

std::string to_string(GaloisVerdict v) {
  switch (v) {
    case GaloisVerdict::galois: return "true";
    case GaloisVerdict::not_galois: return "false";
    case GaloisVerdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

MobiusOverBase compose(const MobiusOverBase& a, const MobiusOverBase& b) {
  return {a.alpha * b.alpha + a.beta * b.gamma, a.alpha * b.beta + a.beta * b.delta,
          a.gamma * b.alpha + a.delta * b.gamma, a.gamma * b.beta + a.delta * b.delta};
}

bool is_identity(const MobiusOverBase& m) {
  return m.beta.is_zero() && m.gamma.is_zero() && !m.alpha.is_zero() && m.alpha == m.delta;
}

// ---------------------------------------------------------------- deck groups

GaloisCertificate deck_group_from_candidates(const Parametrization& phi, const ProjPoint& p,
                                             const std::vector<LineMobius>& candidates, unsigned degree) {
  GaloisCertificate cert;
  cert.degree = degree;
  cert.method = "deck";
  for (const auto& g : candidates) {
    bool ok = deck_verify(phi, p, g);
    auto& bucket = ok ? cert.generators : cert.rejected;
    if (std::find(bucket.begin(), bucket.end(), g) == bucket.end()) bucket.push_back(g);
  }
  const Field& k = phi.field();
  LineMobius id = LineMobius::identity(k);
  std::vector<LineMobius> gens;
  for (const auto& g : cert.generators)
    if (!g.is_identity()) gens.push_back(g);

  if (gens.size() <= 1) {
    cert.elements.push_back({power_label(0), id, std::nullopt});
    if (!gens.empty()) {
      LineMobius cur = gens[0];
      for (unsigned e = 1; !cur.is_identity() && e <= degree; ++e, cur = gens[0] * cur)
        cert.elements.push_back({power_label(e), cur, std::nullopt});
    }
  } else {
    // Breadth-first closure; labels are words in g1, g2, ...
    std::map<LineMobius, std::string> seen{{id, "identity"}};
    std::vector<LineMobius> order{id};
    for (std::size_t q = 0; q < order.size() && order.size() <= degree; ++q)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        LineMobius h = gens[i] * order[q];
        if (seen.count(h)) continue;
        std::string w = "g" + std::to_string(i + 1);
        std::string prev = seen[order[q]];
        seen[h] = prev == "identity" ? w : w + "*" + prev;
        order.push_back(h);
      }
    for (const auto& h : order) cert.elements.push_back({seen[h], h, std::nullopt});
  }

  if (cert.elements.size() > degree) {
    cert.verdict = GaloisVerdict::undetermined;
    cert.detail = "more deck transformations than the extension degree";
  } else if (cert.elements.size() == degree) {
    cert.verdict = GaloisVerdict::galois;
    cert.detail = "verified deck group of order " + std::to_string(degree);
  } else {
    cert.verdict = GaloisVerdict::undetermined;
    cert.detail = "verified deck group has order " + std::to_string(cert.elements.size()) + " < " +
                  std::to_string(degree);
  }
  return cert;
}

// ---------------------------------------------------------------- low degree

namespace {

RatFunc cubic_discriminant_rf(const MultiPoly& f) {
  std::size_t xi = f.var_index("x"), yi = f.var_index("y");
  if (f.degree_in(xi) != 3) throw GaloisError("discriminant test needs a cubic fiber");
  MultiPoly fx = f.derivative(xi);
  if (fx.is_zero()) return RatFunc(f.field());
  // Res(f, c) = c^3 when the derivative is free of x (characteristic 3).
  UPoly res = fx.depends_on(xi) ? UPoly::from_multi(resultant(f, fx, "x"), yi) : UPoly::from_multi(fx, yi).pow(3);
  UPoly a = UPoly::from_multi(f.coefficients_in(xi)[3], yi);
  // disc(f) = -Res(f, f') / a and disc(f / a) = disc(f) / a^4.
  return RatFunc(-res, a.pow(5));
}

}  // namespace

UPoly cubic_discriminant(const MultiPoly& fiber_poly) {
  RatFunc d = cubic_discriminant_rf(fiber_poly);
  if (!d.is_polynomial()) throw GaloisError("discriminant of the monic fiber is not a polynomial in y");
  return d.num() * d.den().coeff(0).inverse();
}

GaloisCertificate galois_test_low_degree(const ProjectionModel& model, const PrecisionBudget& budget) {
  GaloisCertificate cert;
  const MultiPoly& f = model.fiber_poly;
  const Field& k = f.field();
  std::size_t xi = f.var_index("x"), yi = f.var_index("y");
  unsigned n = model.ext_degree;
  cert.degree = n;
  MobiusOverBase id = MobiusOverBase::identity(k);

  if (n == 1) {
    cert.method = "birational";
    cert.verdict = GaloisVerdict::galois;
    cert.elements.push_back({"identity", std::nullopt, id});
    cert.detail = "projection is birational";
    return cert;
  }
  auto coeffs = f.coefficients_in(xi);
  auto uc = [&](std::size_t i) { return UPoly::from_multi(coeffs[i], yi); };

  if (n == 2) {
    cert.method = "separability";
    if (f.derivative(xi).is_zero()) {
      cert.verdict = GaloisVerdict::not_galois;
      cert.detail = "inseparable quadratic extension";
      return cert;
    }
    UPoly a = uc(2), b = uc(1);
    MobiusOverBase sigma{RatFunc(-a), RatFunc(-b), RatFunc(k), RatFunc(a)};
    sigma = sigma.cleared();
    cert.verdict = GaloisVerdict::galois;
    cert.sigma = sigma;
    cert.elements.push_back({"identity", std::nullopt, id});
    cert.elements.push_back({"sigma", std::nullopt, sigma});
    cert.detail = "separable quadratic extension, sigma(x) = -x - b/a";
    return cert;
  }
  if (n != 3) throw GaloisError("fibers of degree above 3 need a parametrization and deck candidates");

  cert.method = "discriminant";
  if (k.characteristic() == 2) {
    cert.verdict = GaloisVerdict::undetermined;
    cert.detail = "cubic discriminant test is not available in characteristic 2";
    return cert;
  }
  RatFunc disc = cubic_discriminant_rf(f);
  if (disc.is_zero()) throw GaloisError("fiber polynomial is inseparable or reducible (zero discriminant)");
  if (disc.is_polynomial()) cert.discriminant = disc.num() * disc.den().coeff(0).inverse();

  UPoly sq = disc.num() * disc.den();
  SqrtResult lead = sqrt_in_field(sq.leading(), budget);
  std::optional<UPoly> root;
  if (lead.status == SqrtStatus::undetermined) {
    cert.verdict = GaloisVerdict::undetermined;
    cert.detail = "could not decide whether the leading coefficient of the discriminant is a square";
    return cert;
  }
  if (lead.status == SqrtStatus::found) root = sqrt_with_leading(sq, *lead.root);
  if (!root) {
    cert.verdict = GaloisVerdict::not_galois;
    cert.detail = "discriminant is not a square in k(y)";
    return cert;
  }

  // sigma(theta) = (-a2 - theta + sqrt(disc) / f'(theta)) / 2 in k(y)[x]/(f).
  RatPoly fm = RatPoly::from_multi(f, "x", "y").monic();
  RatFunc delta(*root, disc.den());
  auto inv = inverse_mod(fm.derivative(), fm);
  if (!inv) throw GaloisError("fiber polynomial is not separable");
  RatPoly x = RatPoly::x(k);
  RatPoly nu = (RatPoly::constant(-fm.coeff(2)) - x + (*inv) * delta) * RatFunc::constant(k.from_int(2).inverse());
  nu = nu % fm;
  MobiusOverBase sigma = lemma31_formulas(fm, nu).cleared();
  MobiusOverBase sigma2 = compose(sigma, sigma).cleared();
  if (!is_identity(compose(sigma, sigma2))) throw GaloisError("constructed automorphism does not have order 3");
  cert.verdict = GaloisVerdict::galois;
  cert.sigma = sigma;
  cert.elements.push_back({"identity", std::nullopt, id});
  cert.elements.push_back({"sigma", std::nullopt, sigma});
  cert.elements.push_back({"sigma^2", std::nullopt, sigma2});
  cert.detail = "discriminant is a square in k(y)";
  return cert;
}

// ---------------------------------------------------------------- sigma on x

SigmaOnX express_sigma_on_x(const Parametrization& phi, const ProjPoint& p, const LineMobius& g) {
  Matrix m = move_to_e1(p);
  std::array<MultiPoly, 3> c = phi.components();
  auto moved = apply_matrix(m, c);
  auto shifted = apply_matrix(m, phi.precompose(g));
  UPoly A = affine_part(moved[0]), B = affine_part(moved[1]), C = affine_part(moved[2]);
  if (C.is_zero()) throw GaloisError("curve lies on the line at infinity of the chart");
  UPoly As = affine_part(shifted[0]), Cs = affine_part(shifted[2]);
  return {RatFunc(A, C), RatFunc(As, Cs), RatFunc(B, C), g};
}

std::string to_string(MobiusStatus s) {
  switch (s) {
    case MobiusStatus::found: return "found";
    case MobiusStatus::none_up_to_bound: return "none_up_to_bound";
    case MobiusStatus::none_proven: return "none_proven";
  }
  return "none_up_to_bound";
}

namespace {

std::optional<MobiusOverBase> mobius_from_vector(const Field& k, const std::vector<FieldElement>& v, unsigned D) {
  auto part = [&](unsigned block) {
    std::vector<FieldElement> c(v.begin() + block * (D + 1), v.begin() + (block + 1) * (D + 1));
    return RatFunc(UPoly(k, c));
  };
  MobiusOverBase m{part(0), part(1), part(2), part(3)};
  if (m.determinant().is_zero()) return std::nullopt;
  return m.cleared();
}

bool satisfies(const SigmaOnX& s, const MobiusOverBase& m) {
  auto at = [&](const RatFunc& r) {
    if (!r.is_polynomial()) throw GaloisError("expected polynomial coefficients");
    return eval_at(r.num() * r.den().coeff(0).inverse(), s.y);
  };
  RatFunc a = at(m.alpha), b = at(m.beta), c = at(m.gamma), d = at(m.delta);
  return s.sigma_x * (c * s.x + d) == a * s.x + b;
}

// Rank of the fiber system at the sample t0, or 0 when t0 hits a pole.
std::size_t fiber_rank(const SigmaOnX& s, const std::vector<LineMobius>& deck, const FieldElement& t0) {
  const Field& k = t0.field();
  if (!eval_rf(s.y, t0)) return 0;
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& h : deck) {
    auto th = act_affine(h, t0);
    if (!th) return 0;
    auto tg = act_affine(*s.g, *th);
    if (!tg) return 0;
    auto xh = eval_rf(s.x, *th), xg = eval_rf(s.x, *tg);
    if (!xh || !xg) return 0;
    rows.push_back({*xh * *xg, *xg, *xh, k.one()});
  }
  if (rows.empty()) return 0;
  return Matrix::from_rows(k, rows).rank();
}

}  // namespace

MobiusSolveResult mobius_solver(const SigmaOnX& s, unsigned degree_bound, const std::vector<LineMobius>& deck,
                                std::uint64_t seed, std::stop_token st) {
  const Field& k = s.x.field();
  MobiusSolveResult out;
  out.degree_bound = degree_bound;
  const UPoly &xn = s.x.num(), &xd = s.x.den(), &sn = s.sigma_x.num(), &sd = s.sigma_x.den();
  const UPoly &yn = s.y.num(), &yd = s.y.den();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-3, 3);

  for (unsigned D = 0; D <= degree_bound; ++D) {
    check_stop(st);
    std::vector<UPoly> pw;
    for (unsigned j = 0; j <= D; ++j) pw.push_back(yn.pow(j) * yd.pow(D - j));
    std::vector<UPoly> cols;
    for (unsigned j = 0; j <= D; ++j) cols.push_back(-(sd * xn * pw[j]));  // alpha_j
    for (unsigned j = 0; j <= D; ++j) cols.push_back(-(sd * xd * pw[j]));  // beta_j
    for (unsigned j = 0; j <= D; ++j) cols.push_back(sn * xn * pw[j]);     // gamma_j
    for (unsigned j = 0; j <= D; ++j) cols.push_back(sn * xd * pw[j]);     // delta_j
    int rows = 0;
    for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
    Matrix sys(k, static_cast<std::size_t>(std::max(rows, 1)), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].coeffs().size(); ++i) sys(i, j) = cols[j].coeffs()[i];
    auto basis = sys.nullspace();
    if (basis.empty()) continue;

    std::vector<std::vector<FieldElement>> tries = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        std::vector<FieldElement> v(basis[i].size());
        for (std::size_t e = 0; e < v.size(); ++e) v[e] = basis[i][e] + basis[j][e];
        tries.push_back(v);
      }
    for (int r = 0; r < 20; ++r) {
      std::vector<FieldElement> v(basis[0].size(), k.zero());
      for (const auto& b : basis) {
        FieldElement c = k.from_int(small(rng));
        for (std::size_t e = 0; e < v.size(); ++e) v[e] += c * b[e];
      }
      tries.push_back(v);
    }
    for (const auto& v : tries) {
      auto m = mobius_from_vector(k, v, D);
      if (!m || !satisfies(s, *m)) continue;
      out.status = MobiusStatus::found;
      out.mobius = *m;
      out.degree_used = static_cast<int>(D);
      out.certificate = "solution space of dimension " + std::to_string(basis.size()) + " at degree " +
                        std::to_string(D);
      return out;
    }
  }

  out.status = MobiusStatus::none_up_to_bound;
  out.certificate = "no invertible solution with coefficient degree <= " + std::to_string(degree_bound);
  if (deck.size() >= 4 && s.g) {
    for (long t = 1; t <= 60; ++t) {
      check_stop(st);
      long v = (t % 2 ? 1 : -1) * ((t + 1) / 2) + 1;
      FieldElement t0 = k.from_int(v);
      if (fiber_rank(s, deck, t0) == 4) {
        out.status = MobiusStatus::none_proven;
        out.certificate += "; fiber over t0 = " + t0.to_string() +
                           " forces alpha = beta = gamma = delta = 0 (rank 4), so no solution of any degree";
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- cubic formulas

MobiusOverBase lemma31_formulas(const RatPoly& f, const RatPoly& nu) {
  if (f.degree() != 3 || !(f.leading() == RatFunc::constant(f.field().one())))
    throw GaloisError("expected a monic cubic");
  if (nu.degree() > 2) throw GaloisError("expected sigma(x) of degree at most 2");
  const RatFunc a2 = f.coeff(2), a1 = f.coeff(1), a0 = f.coeff(0);
  const RatFunc n0 = nu.coeff(0), n1 = nu.coeff(1), n2 = nu.coeff(2);
  if (!f.compose(nu).divmod(f).second.is_zero())
    throw GaloisError("sigma(x) is not a root of f: not an automorphism's polynomial form");
  MobiusOverBase m{a2 * n1 * n2 - a1 * n2 * n2 + n0 * n2 - n1 * n1, a2 * n0 * n2 - a0 * n2 * n2 - n0 * n1, n2,
                   a2 * n2 - n1};
  RatPoly lhs = RatPoly(f.field(), {m.delta, m.gamma}) * nu - RatPoly(f.field(), {m.beta, m.alpha});
  if (!(lhs % f).is_zero()) throw GaloisError("congruence (gamma x + delta) sigma(x) = alpha x + beta fails");
  if (m.determinant().is_zero()) throw GaloisError("degenerate fractional-linear form");
  return m;
}

// ---------------------------------------------------------------- plane extensions

PlaneRationalMap jonquieres_builder(const MobiusOverBase& mob, const ProjPoint& p) {
  const Field& k = p.field();
  if (mob.determinant().is_zero()) throw GaloisError("degenerate fractional-linear map");
  MobiusOverBase c = mob.cleared();
  int e = 0;
  for (const RatFunc* r : {&c.alpha, &c.beta, &c.gamma, &c.delta}) e = std::max(e, r->num().degree());
  auto [X, Y, Z] = xyz(k);
  auto hom = [&](const RatFunc& r) {
    MultiPoly out(k, plane_vars());
    const auto& cs = r.num().coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (!cs[j].is_zero()) out.add_term({0, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(e - j)}, cs[j]);
    return out;
  };
  MultiPoly N = hom(c.alpha) * X + hom(c.beta) * Z;
  MultiPoly D = hom(c.gamma) * X + hom(c.delta) * Z;
  PlaneRationalMap chart({N * Z, Y * D, Z * D});
  Matrix m = move_to_e1(p);
  return map_compose(PlaneRationalMap::linear(*m.inverse()), map_compose(chart, PlaneRationalMap::linear(m)));
}

LinearExtension linear_extension_solver(const Parametrization& phi, const LineMobius& g) {
  const Field& k = phi.field();
  const unsigned D = static_cast<unsigned>(phi.degree());
  auto target = phi.precompose(g);
  auto coeff = [&](const MultiPoly& f, unsigned a) {
    return f.coefficient({a, D - a});
  };
  Matrix sys(k, 3 * (D + 1), 9);
  std::vector<FieldElement> rhs(3 * (D + 1), k.zero());
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned a = 0; a <= D; ++a) {
      std::size_t r = i * (D + 1) + a;
      for (unsigned j = 0; j < 3; ++j) sys(r, 3 * i + j) = coeff(phi[j], a);
      rhs[r] = coeff(target[i], a);
    }
  LinearExtension out;
  auto sol = sys.solve(rhs);
  if (!sol) {
    out.reason = "linear system A*phi = phi o g is inconsistent";
    return out;
  }
  auto kernel = sys.nullspace();
  std::vector<std::vector<FieldElement>> tries{*sol};
  for (const auto& b : kernel) {
    std::vector<FieldElement> v = *sol;
    for (std::size_t e = 0; e < 9; ++e) v[e] += b[e];
    tries.push_back(v);
  }
  for (const auto& v : tries) {
    Matrix a(k, 3, 3);
    for (std::size_t e = 0; e < 9; ++e) a(e / 3, e % 3) = v[e];
    if (a.determinant().is_zero()) continue;
    out.matrix = a;
    out.reason = kernel.empty() ? "unique solution" : "solution not unique (components linearly dependent)";
    return out;
  }
  out.reason = "every solution of A*phi = phi o g is singular";
  return out;
}

std::string to_string(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::jonquieres: return "jonquieres";
    case ExtensionClass::cremona_only: return "cremona_only";
    case ExtensionClass::linear: return "linear";
    case ExtensionClass::none_found: return "none_found";
    case ExtensionClass::undetermined: return "undetermined";
  }
  return "undetermined";
}

bool ElementExtension::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

ExtensionReport extension_verdict(const ProjectionModel& model, const GaloisCertificate& cert,
                                  const ExtensionOptions& opts) {
  ExtensionReport rep;
  const PlaneCurve& C = model.curve;
  const auto& phi = C.param();
  const MultiPoly& F = C.implicit();
  unsigned D = opts.degree_bound.value_or(static_cast<unsigned>(model.base_degree() + 2));
  rep.degree_bound = D;
  rep.bound_m = static_cast<unsigned>((C.degree() + 2) / 3);

  std::vector<LineMobius> deck;
  for (const auto& e : cert.elements)
    if (e.on_line) deck.push_back(*e.on_line);

  auto bound_certificate = [&]() -> const MultiplicityCertificate& {
    if (!rep.bound_certificate) {
      try {
        rep.bound_certificate = has_point_of_multiplicity_ge(C, rep.bound_m, opts.seed, {}, opts.stop);
      } catch (const CurveError& e) {
        MultiplicityCertificate u;
        u.m = rep.bound_m;
        u.detail = e.what();
        rep.bound_certificate = u;
      }
    }
    return *rep.bound_certificate;
  };

  for (const auto& el : cert.elements) {
    check_stop(opts.stop);
    ElementExtension r;
    r.label = el.label;
    std::optional<LineMobius> g = el.on_line;

    if (el.on_fiber) {
      r.mobius = el.on_fiber->cleared();
      r.mobius_status = MobiusStatus::found;
    } else if (g && phi) {
      auto s = express_sigma_on_x(*phi, model.center, *g);
      auto res = mobius_solver(s, D, deck, opts.seed, opts.stop);
      r.mobius_status = res.status;
      r.mobius = res.mobius;
      r.notes = res.certificate;
    }
    if (r.mobius) {
      PlaneRationalMap J = jonquieres_builder(*r.mobius, model.center);
      r.verdict = ExtensionClass::jonquieres;
      r.checks.push_back({"pencil_preserved", pencil_preserved(J, model.center)});
      r.checks.push_back({"curve_preserved", preserves_curve(F, J)});
      if (g && phi) r.checks.push_back({"restricts_to_element", restricts_to(J, *phi, *g)});
      r.map = J;
      rep.elements.push_back(std::move(r));
      continue;
    }
    if (g && opts.cremona_extender) {
      if (auto J = opts.cremona_extender(*g)) {
        r.verdict = ExtensionClass::cremona_only;
        r.checks.push_back({"curve_preserved", preserves_curve(F, *J)});
        if (phi) r.checks.push_back({"restricts_to_element", restricts_to(*J, *phi, *g)});
        r.map = *J;
        rep.elements.push_back(std::move(r));
        continue;
      }
    }
    bool linear_refuted = false;
    if (g && phi) {
      auto lin = linear_extension_solver(*phi, *g);
      if (lin.matrix) {
        PlaneRationalMap A = PlaneRationalMap::linear(*lin.matrix);
        r.verdict = ExtensionClass::linear;
        r.linear = lin.matrix;
        r.map = A;
        r.checks.push_back({"curve_preserved", preserves_curve(F, A)});
        r.checks.push_back({"restricts_to_element", restricts_to(A, *phi, *g)});
        rep.elements.push_back(std::move(r));
        continue;
      }
      linear_refuted = true;
      if (!r.notes.empty()) r.notes += "; ";
      r.notes += "linear: " + lin.reason;
    }
    const auto& bc = bound_certificate();
    if (linear_refuted && bc.status == CertStatus::no) {
      r.verdict = ExtensionClass::none_found;
      r.proven = true;
      r.notes += "; no point of multiplicity >= " + std::to_string(rep.bound_m) +
                 ", so any plane extension would be linear";
    } else if (linear_refuted && r.mobius_status == MobiusStatus::none_proven) {
      r.verdict = ExtensionClass::none_found;
    } else {
      r.verdict = ExtensionClass::undetermined;
    }
    rep.elements.push_back(std::move(r));
  }

  rep.all_jonquieres = !rep.elements.empty();
  rep.all_extend = !rep.elements.empty();
  for (const auto& e : rep.elements) {
    bool ext = e.verdict == ExtensionClass::jonquieres || e.verdict == ExtensionClass::cremona_only ||
               e.verdict == ExtensionClass::linear;
    rep.all_jonquieres = rep.all_jonquieres && e.verdict == ExtensionClass::jonquieres;
    rep.all_extend = rep.all_extend && ext;
    if (ext) rep.extendable.push_back(e.label);
  }
  return rep;
}

}  // namespace galcrem
