// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "galcrem/report.hpp"
#include "support.hpp"

using namespace gt;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  std::vector<std::string> failures;
};

ProjPoint origin_point(const Field& k) { return pt(k, "1", "0", "0"); }

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

bool group_order(const Scenario& s, unsigned expected, Checks& c) {
  ProjectionModel model = projection_model(s.curve, *s.point);
  auto cert = deck_group_from_candidates(*s.curve.param(), *s.point, s.generators, model.ext_degree);
  c.expect(cert.verdict == GaloisVerdict::galois, "deck group does not certify a Galois point");
  c.expect(cert.elements.size() == expected, "group order " + std::to_string(cert.elements.size()));
  return cert.elements.size() == expected;
}

void criterion1(Checks& c) {
  Scenario s = builtin_scenario("cubic-omega");
  const Field& k = s.field;
  ProjPoint p = origin_point(k);
  const Parametrization& phi = *s.curve.param();
  ProjectionModel model = projection_model(s.curve, p);
  c.expect(model.ext_degree == 3, "ext_degree");
  auto psi = projection_on_line(phi, p);
  c.expect(proportional_eq({psi[0], psi[1]}, {line("u^3", k), line("v^3", k)}), "psi");

  UPoly disc = cubic_discriminant(xy("x^3 - 3*x*y - y^2 - y", k));
  UPoly y = UPoly::x(k), one = UPoly::constant(k.one());
  UPoly expected = UPoly::constant(k.from_int(-27)) * y * y * (y - one) * (y - one);
  c.expect(disc == expected, "discriminant " + disc.to_string());

  auto low = galois_test_low_degree(model);
  c.expect(low.verdict == GaloisVerdict::galois, "low degree verdict");
  c.expect(group_order(s, 3, c), "deck group");

  PlaneRationalMap J({plane("(Y - z*Z)*X + Y*Z*(1 - z)", k), plane("Y*((z - 1)*X + z*Y - Z)", k),
                      plane("Z*((z - 1)*X + z*Y - Z)", k)});
  c.expect(pencil_preserved(J, p), "pi_P o J not proportional to pi_P");
  c.expect(preserves_curve(s.curve.implicit(), J), "F does not divide F o J");
  c.expect(restricts_to(J, phi, LineMobius::diagonal(k.generator(), k.one())), "J does not restrict to the deck omega");
}

void criterion2(Checks& c) {
  Scenario s = builtin_scenario("cubic-char3");
  const Field& k = s.field;
  ProjPoint p = origin_point(k);
  const Parametrization& phi = *s.curve.param();
  auto psi = projection_on_line(phi, p);
  c.expect(proportional_eq({psi[0], psi[1]}, {line("u^3", k), line("u^2*v - v^3", k)}), "psi");
  LineMobius g(k.one(), k.zero(), k.one(), k.one());
  c.expect(deck_verify(phi, p, g), "[u : u + v] is not a deck transformation");
  c.expect(g.order(10) == 3, "order of [u : u + v]");
  group_order(s, 3, c);
  PlaneRationalMap J({plane("X + Y", k), plane("Y", k), plane("Z", k)});
  const MultiPoly& F = s.curve.implicit();
  c.expect(F.compose({J[0], J[1], J[2]}) == F, "F o J != F");
}

void criterion3(Checks& c) {
  Scenario s = builtin_scenario("quartic-i");
  const Field& k = s.field;
  ProjPoint p = origin_point(k);
  const Parametrization& phi = *s.curve.param();
  ProjectionModel model = projection_model(s.curve, p);
  c.expect(model.ext_degree == 4, "ext_degree");
  auto cert = deck_group_from_candidates(phi, p, s.generators, 4);
  c.expect(cert.verdict == GaloisVerdict::galois && cert.elements.size() == 4, "deck group of order 4");
  FieldElement i = k.generator().pow(2);
  for (unsigned e = 0; e < 4; ++e)
    c.expect(deck_verify(phi, p, LineMobius::diagonal(i.pow(e), k.one())), "diag(i^" + std::to_string(e) + ", 1)");

  LineMobius sigma = LineMobius::diagonal(i, k.one());
  auto solved = mobius_solver(express_sigma_on_x(phi, p, sigma), 3);
  c.expect(!solved.mobius && solved.status != MobiusStatus::found, "mobius_solver found a solution for sigma");

  const std::vector<std::array<std::string, 3>> nodes{{"0", "1", "1"}, {"z^3 + z", "-1", "1"}, {"z^3 + z", "1", "-1"}};
  for (const auto& q : nodes) {
    ProjPoint node = pt(k, q[0], q[1], q[2]);
    c.expect(multiplicity_implicit(s.curve, node) == 2, "multiplicity at " + node.to_string());
  }

  auto r = replay(*s.chain, s.curve);
  c.expect(r.curves.size() == 4, "chain length");
  if (r.curves.size() == 4) {
    c.expect(r.curves[1].implicit() == plane("X^2*Y^2 + 6*X^2*Y*Z + X^2*Z^2 + 4*Y^2*Z^2", k), "first chain curve");
    c.expect(r.curves[2].implicit() == plane("4*X^2 + Y^2 + 6*Y*Z + Z^2", k), "second chain curve");
    c.expect(proportional_eq({r.end().implicit()}, {plane("Y^2 - X*Z", k)}), "end curve");
  }

  auto end = end_automorphism(*s.chain, phi, sigma);
  c.expect(end.has_value(), "no automorphism of the end conic");
  if (end) {
    PlaneRationalMap J = conjugate_extension(*s.chain, end->matrix);
    c.expect(preserves_curve(s.curve.implicit(), J), "F does not divide F o J");
    c.expect(restricts_to(J, phi, sigma), "J o phi not proportional to phi o sigma");
  }
}

void criterion4(Checks& c) {
  Scenario s = builtin_scenario("quintic-zeta5");
  const Field& k = s.field;
  ProjPoint p = origin_point(k);
  const Parametrization& phi = *s.curve.param();
  const auto& f = phi.components();
  c.expect(gcd_forms(gcd_forms(f[0], f[1]), f[2]).degree() == 0, "component gcd");
  c.expect(phi.degree() == 7 && s.curve.degree() == 7, "degree 7");
  c.expect(!s.implicit_given, "implicit form was supplied rather than interpolated");
  c.expect(multiplicity_implicit(s.curve, p) == 2, "implicit multiplicity at P");
  c.expect(multiplicity_param(phi, p) == 2, "parametric multiplicity at P");

  ProjectionModel model = projection_model(s.curve, p);
  c.expect(model.ext_degree == 5, "ext_degree");
  auto cert = deck_group_from_candidates(phi, p, s.generators, 5);
  c.expect(cert.verdict == GaloisVerdict::galois && cert.elements.size() == 5, "deck group of order 5");

  auto none = has_point_of_multiplicity_ge(s.curve, 3);
  c.expect(none.status == CertStatus::no, "a triple point was not excluded");
  c.expect(none.gcd_degree == 0, "emptiness certificate");

  for (long e = 1; e <= 4; ++e)
    c.expect(!linear_extension_solver(phi, LineMobius::diagonal(k.generator().pow(e), k.one())).matrix,
             "sigma^" + std::to_string(e) + " extends linearly");

  auto ext = extension_verdict(model, cert);
  c.expect(ext.extendable == std::vector<std::string>{"identity"}, "extendable elements");
}

// Cubics x = a(t), y = t^3 with the deck t -> w t. The automorphism
// x -> a(w t) is written as a polynomial in x over k(y) by solving for t and
// t^2 in the basis 1, x - c0, (x - c0)^2.
void criterion5(Checks& c) {
  Field k = cyc(3);
  FieldElement w = k.generator();
  std::mt19937_64 rng(0xc0b1c);
  RatFunc y = RatFunc(UPoly::x(k));
  auto cst = [&](const FieldElement& e) { return RatFunc::constant(e); };
  for (int n = 0; n < 50; ++n) {
    FieldElement a0 = random_element(k, rng, 4), a1 = random_element(k, rng, 4), a2 = random_element(k, rng, 4),
                 a3 = random_element(k, rng, 4);
    if (a1.is_zero() && a2.is_zero()) a1 = k.one();
    // a(u, v) = a3 u^3 + a2 u^2 v + a1 u v^2 + a0 v^3
    MultiPoly u = line("u", k), v = line("v", k);
    MultiPoly a = u.pow(3) * a3 + u * u * v * a2 + u * v * v * a1 + v.pow(3) * a0;
    Parametrization phi({a, u.pow(3), v.pow(3)});
    ProjPoint p = origin_point(k);
    ProjectionModel model = projection_model(PlaneCurve::from_parametrization(phi), p);
    if (model.ext_degree != 3) {
      c.expect(false, "sample " + std::to_string(n) + " has ext_degree " + std::to_string(model.ext_degree));
      continue;
    }
    RatPoly f = RatPoly::from_multi(model.fiber_poly, "x", "y").monic();

    // coordinates of 1, X1, X2 on the basis 1, t, t^2
    RatFunc c0 = cst(a3) * y + cst(a0);
    std::array<std::array<RatFunc, 3>, 3> B{{{cst(k.one()), RatFunc(k), RatFunc(k)},
                                             {RatFunc(k), cst(a1), cst(a2)},
                                             {cst(k.from_int(2) * a1 * a2) * y, cst(a2 * a2) * y, cst(a1 * a1)}}};
    // solve r = q0 + q1 X1 + q2 X2 for the basis vectors t and t^2 (Cramer)
    auto det3 = [](const std::array<std::array<RatFunc, 3>, 3>& m) {
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    RatFunc D = det3(B);
    if (D.is_zero()) {
      c.expect(false, "singular basis in sample " + std::to_string(n));
      continue;
    }
    auto express = [&](std::size_t target) {
      std::array<RatFunc, 3> q{RatFunc(k), RatFunc(k), RatFunc(k)};
      for (std::size_t j = 0; j < 3; ++j) {
        auto m = B;
        for (std::size_t col = 0; col < 3; ++col) m[j][col] = col == target ? cst(k.one()) : RatFunc(k);
        q[j] = det3(m) / D;
      }
      return q;
    };
    RatPoly X1 = RatPoly::x(k) - RatPoly::constant(c0);
    RatPoly X2 = X1 * X1;
    auto combine = [&](const std::array<RatFunc, 3>& q) { return RatPoly::constant(q[0]) + X1 * q[1] + X2 * q[2]; };
    RatPoly t = combine(express(1)), t2 = combine(express(2));
    RatPoly nu = (RatPoly::constant(c0) + t * cst(a1 * w) + t2 * cst(a2 * w * w)) % f;

    MobiusOverBase m = lemma31_formulas(f, nu);
    RatPoly x = RatPoly::x(k);
    RatPoly lhs = (x * m.gamma + RatPoly::constant(m.delta)) * nu;
    RatPoly rhs = x * m.alpha + RatPoly::constant(m.beta);
    c.expect(((lhs - rhs) % f).is_zero(), "congruence fails for sample " + std::to_string(n));

    auto solved = mobius_solver(express_sigma_on_x(phi, p, LineMobius::diagonal(w, k.one())), 4);
    c.expect(solved.mobius && solved.mobius->proportional_to(m),
             "solver and normal form disagree for sample " + std::to_string(n));
  }
}

void criterion6(Checks& c) {
  Field k = Q();
  std::mt19937_64 rng(0xc011c);
  MultiPoly conic = plane("Y^2 - X*Z", k);
  Parametrization rho = param(k, "u^2", "u*v", "v^2");
  for (int n = 0; n < 20; ++n) {
    LineMobius g = random_mobius(k, rng), h = random_mobius(k, rng);
    Matrix L = conic_lift(g);
    c.expect(conic_lift(g * h).proportional_to(L * conic_lift(h)), "homomorphism, sample " + std::to_string(n));
    PlaneRationalMap A = PlaneRationalMap::linear(L);
    MultiPoly moved = conic.compose({A[0], A[1], A[2]});
    c.expect(proportional_eq({moved}, {conic}), "invariance, sample " + std::to_string(n));
    auto solved = linear_extension_solver(rho, g);
    c.expect(solved.matrix && solved.matrix->proportional_to(L), "solver lift, sample " + std::to_string(n));
  }
}

struct Verdicts {
  Json degree, galois;
  std::map<std::string, Json> classes;
  bool operator==(const Verdicts&) const = default;
};

Verdicts verdicts_of(const Scenario& s) {
  Report r = verify_scenario(s, RunOptions{});
  Verdicts v{r.data.value("degree", Json()), r.data.value("galois", Json()), {}};
  if (r.data.contains("extensions"))
    for (const auto& e : r.data["extensions"]) v.classes[e["element"].get<std::string>()] = e["verdict"];
  return v;
}

void criterion7(Checks& c) {
  for (const auto& name : builtin_names()) {
    Scenario s = builtin_scenario(name);
    Verdicts base = verdicts_of(s);
    c.expect(base.classes.size() == base.degree.get<unsigned>(), name + ": missing element verdicts");
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Matrix m = random_invertible(s.field, 0xa11 + 31 * seed);
      c.expect(verdicts_of(conjugate(s, m)) == base, name + ": verdicts change under matrix seed " + std::to_string(seed));
    }
  }
}

void criterion8(Checks& c) {
  for (const auto& name : builtin_names()) {
    Scenario s = builtin_scenario(name);
    const Parametrization& phi = *s.curve.param();
    std::vector<unsigned> mults;
    for (const auto& q : s.singular_points) {
      unsigned mi = multiplicity_implicit(s.curve, q), mp = multiplicity_param(phi, q);
      c.expect(mi == mp, name + ": multiplicities disagree at " + q.to_string());
      mults.push_back(mi);
    }
    ReductionChain chain = s.chain ? *s.chain : greedy_reduction(s.curve, s.singular_points);
    auto r = replay(chain, s.curve);
    for (const auto& rec : r.records)
      if (rec.kind == "std_quadratic_at") {
        int expected = 2 * rec.degree_before - static_cast<int>(rec.multiplicities[0] + rec.multiplicities[1] +
                                                                rec.multiplicities[2]);
        c.expect(rec.degree_after == expected && rec.degree_formula_holds, name + ": degree formula");
      }
    for (std::size_t i = 0; i + 1 < r.curves.size(); ++i)
      if (r.records[i].kind == "std_quadratic_at") {
        auto q = std_quadratic_pushforward(linear_pushforward(
            r.curves[i], *quadratic_frame(std::get<QuadraticStep>(chain.steps[i]).points).inverse()));
        c.expect(q.image.degree() == q.expected_degree, name + ": pushforward degree");
      }
    int d = s.curve.degree();
    auto pr = kodaira_pairing(d, mults);
    c.expect(pr.pairing == d - 6, name + ": pairing");
    bool guaranteed = line_equivalence_decision(s.curve) == LineEquivalence::equivalent_to_line;
    c.expect(guaranteed == (d < 6), name + ": line equivalence decision");
    c.expect(pr.line_equivalence_guaranteed == (d < 6), name + ": pairing flag");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double limit_s;
    std::function<void(Checks&)> run;
  };
  std::vector<Criterion> all{
      {1, "cubic over Q(zeta_3)", 1, criterion1},
      {2, "cubic over F_3", 1, criterion2},
      {3, "quartic over Q(zeta_8)", 30, criterion3},
      {4, "septic over Q(zeta_5)", 120, criterion4},
      {5, "order-3 normal forms on 50 cubics", 0, criterion5},
      {6, "conic lifts on 20 samples", 0, criterion6},
      {7, "conjugation invariance", 0, criterion7},
      {8, "oracle cross-checks", 0, criterion8},
  };
  int failed = 0;
  for (const auto& cr : all) {
    Checks c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_s > 0 && secs > cr.limit_s) c.failures.push_back("took longer than " + std::to_string(cr.limit_s) + " s");
    std::ostringstream line;
    line << "criterion " << cr.number << " (" << cr.title << "): " << (c.failures.empty() ? "PASS" : "FAIL") << " ["
         << std::fixed << std::setprecision(2) << secs << " s]";
    if (!c.failures.empty()) line << " " << join(c.failures);
    std::cout << line.str() << "\n";
    failed += !c.failures.empty();
  }
  return failed == 0 ? 0 : 1;
}
