#include "doctest.h"
#include "support.hpp"

using namespace gt;

namespace {

RatFunc rf(const Field& k, std::initializer_list<const char*> coeffs) {
  std::vector<FieldElement> c;
  for (auto s : coeffs) c.push_back(el(s, k));
  return RatFunc(UPoly(k, c));
}

MobiusOverBase mob(RatFunc a, RatFunc b, RatFunc c, RatFunc d) { return {a, b, c, d}; }

Parametrization cubic_param(const Field& k) { return param(k, "u*v^2 + u^2*v", "u^3", "v^3"); }
Parametrization quartic_param(const Field& k) { return param(k, "u*v^3 + u^3*v", "u^4", "v^4"); }
Parametrization septic_param(const Field& k) { return param(k, "u*v^6 - u^7", "u^5*(u^2 + v^2)", "v^5*(u^2 + v^2)"); }

// (alpha x + beta) / (gamma x + delta) reduced modulo f, as a polynomial in x.
RatPoly polynomial_form(const MobiusOverBase& m, const RatPoly& f) {
  const Field& k = f.field();
  RatPoly x = RatPoly::x(k);
  RatPoly num = x * m.alpha + RatPoly::constant(m.beta);
  RatPoly den = x * m.gamma + RatPoly::constant(m.delta);
  auto inv = inverse_mod(den, f);
  REQUIRE(inv);
  return (num * *inv) % f;
}

}  // namespace

TEST_SUITE("galois") {
  TEST_CASE("projection models") {
    Field k8 = cyc(8);
    auto quartic = projection_model(PlaneCurve::from_parametrization(quartic_param(k8)), pt(k8, "1", "0", "0"));
    CHECK(quartic.ext_degree == 4);
    CHECK(quartic.multiplicity == 0);
    CHECK(quartic.fiber_poly == xy("x^4 - 4*y*x^2 - y^3 + 2*y^2 - y", k8));

    Field k5 = cyc(5);
    auto septic = projection_model(PlaneCurve::from_parametrization(septic_param(k5)), pt(k5, "1", "0", "0"));
    CHECK(septic.multiplicity == 2);
    CHECK(septic.ext_degree == 5);
    CHECK(septic.fiber_poly.degree_in("x") == 5);

    Field q = Q();
    auto conic = projection_model(PlaneCurve::from_implicit(plane("X^2 - Y*Z", q)), pt(q, "0", "1", "0"));
    CHECK(conic.multiplicity == 1);
    CHECK(conic.ext_degree == 1);

    CHECK_THROWS_AS(projection_model(PlaneCurve::from_implicit(plane("X - Y", q)), pt(q, "1", "1", "0")), GaloisError);
  }

  TEST_CASE("deck transformations") {
    Field k8 = cyc(8);
    ProjPoint p8 = pt(k8, "1", "0", "0");
    CHECK(deck_verify(quartic_param(k8), p8, LineMobius::diagonal(el("z^2", k8), k8.one())));
    CHECK_FALSE(deck_verify(quartic_param(k8), p8, LineMobius::diagonal(el("z", k8), k8.one())));
    CHECK(deck_verify(quartic_param(k8), p8, LineMobius::identity(k8)));

    Field f3 = Fp(3);
    Parametrization phi3 = param(f3, "v^3", "u^3", "u^2*v - v^3");
    auto psi = projection_on_line(phi3, pt(f3, "1", "0", "0"));
    CHECK(proportional_eq({psi[0], psi[1]}, {line("u^3", f3), line("u^2*v - v^3", f3)}));
    LineMobius g(f3.one(), f3.zero(), f3.one(), f3.one());
    CHECK(deck_verify(phi3, pt(f3, "1", "0", "0"), g));
    CHECK(g.order(10) == 3);
  }

  TEST_CASE("deck groups") {
    Field k8 = cyc(8);
    auto c4 = deck_group_from_candidates(quartic_param(k8), pt(k8, "1", "0", "0"),
                                         {LineMobius::diagonal(el("z^2", k8), k8.one())}, 4);
    CHECK(c4.verdict == GaloisVerdict::galois);
    REQUIRE(c4.elements.size() == 4);
    for (unsigned e = 0; e < 4; ++e)
      CHECK(*c4.elements[e].on_line == LineMobius::diagonal(el("z^2", k8).pow(e), k8.one()));

    Field k5 = cyc(5);
    auto c5 = deck_group_from_candidates(septic_param(k5), pt(k5, "1", "0", "0"),
                                         {LineMobius::diagonal(k5.generator(), k5.one())}, 5);
    CHECK(c5.verdict == GaloisVerdict::galois);
    CHECK(c5.elements.size() == 5);

    Field q = Q();
    auto cq = deck_group_from_candidates(cubic_param(q), pt(q, "1", "0", "0"),
                                         {LineMobius::diagonal(q.from_int(-1), q.one()),
                                          LineMobius(q.zero(), q.one(), q.one(), q.zero())},
                                         3);
    CHECK(cq.verdict == GaloisVerdict::undetermined);
    CHECK(cq.rejected.size() == 2);
  }

  TEST_CASE("low degree tests") {
    Field q = Q();
    auto conic = projection_model(PlaneCurve::from_implicit(plane("X^2 - Y*Z", q)), pt(q, "1", "0", "0"));
    REQUIRE(conic.fiber_poly == xy("x^2 - y", q));
    auto c2 = galois_test_low_degree(conic);
    CHECK(c2.verdict == GaloisVerdict::galois);
    REQUIRE(c2.sigma);
    CHECK(c2.sigma->proportional_to(mob(rf(q, {"-1"}), rf(q, {}), rf(q, {}), rf(q, {"1"}))));

    const char* cubic = "X^3 - 3*X*Y*Z - Y^2*Z - Y*Z^2";
    Field k3 = cyc(3);
    auto m3 = projection_model(PlaneCurve::from_implicit(plane(cubic, k3)), pt(k3, "1", "0", "0"));
    CHECK(cubic_discriminant(m3.fiber_poly) == UPoly(k3, {k3.zero(), k3.zero(), k3.from_int(-27), k3.from_int(54),
                                                            k3.from_int(-27)}));
    CHECK(galois_test_low_degree(m3).verdict == GaloisVerdict::galois);
    auto mq = projection_model(PlaneCurve::from_implicit(plane(cubic, q)), pt(q, "1", "0", "0"));
    CHECK(galois_test_low_degree(mq).verdict == GaloisVerdict::not_galois);

    auto other = projection_model(PlaneCurve::from_implicit(plane("X^3 + X*Y*Z + Y*Z^2", q)), pt(q, "1", "0", "0"));
    CHECK(cubic_discriminant(other.fiber_poly) ==
          UPoly(q, {q.zero(), q.zero(), q.from_int(-27), q.from_int(-4)}));
    CHECK(galois_test_low_degree(other).verdict == GaloisVerdict::not_galois);

    Field f2 = Fp(2);
    auto m2 = projection_model(PlaneCurve::from_implicit(plane("X^3 + X*Y*Z + Y^3 + Z^3", f2)), pt(f2, "1", "0", "0"));
    CHECK(galois_test_low_degree(m2).verdict == GaloisVerdict::undetermined);

    auto line = projection_model(PlaneCurve::from_implicit(plane("X^2 - Y*Z", q)), pt(q, "0", "1", "0"));
    CHECK(galois_test_low_degree(line).verdict == GaloisVerdict::galois);
  }

  TEST_CASE("sigma on the fiber coordinate") {
    Field k8 = cyc(8);
    auto s = express_sigma_on_x(quartic_param(k8), pt(k8, "1", "0", "0"), LineMobius::diagonal(el("z^2", k8), k8.one()));
    CHECK(s.x == rf(k8, {"0", "1", "0", "1"}));
    CHECK(s.sigma_x == rf(k8, {"0", "z^2", "0", "-z^2"}));

    Field k3 = cyc(3);
    auto c = express_sigma_on_x(cubic_param(k3), pt(k3, "1", "0", "0"), LineMobius::diagonal(k3.generator(), k3.one()));
    CHECK(c.x == rf(k3, {"0", "1", "1"}));
    CHECK(c.sigma_x == rf(k3, {"0", "z", "z^2"}));

    auto id = express_sigma_on_x(cubic_param(k3), pt(k3, "1", "0", "0"), LineMobius::identity(k3));
    CHECK(id.sigma_x == id.x);
  }

  TEST_CASE("fractional-linear solver") {
    Field k8 = cyc(8);
    Parametrization phi = quartic_param(k8);
    ProjPoint p = pt(k8, "1", "0", "0");
    auto cert = deck_group_from_candidates(phi, p, {LineMobius::diagonal(el("z^2", k8), k8.one())}, 4);
    std::vector<LineMobius> deck;
    for (const auto& e : cert.elements) deck.push_back(*e.on_line);
    auto r = mobius_solver(express_sigma_on_x(phi, p, deck[1]), 3, deck);
    CHECK(r.status == MobiusStatus::none_proven);
    CHECK_FALSE(r.mobius.has_value());
    CHECK(mobius_solver(express_sigma_on_x(phi, p, deck[1]), 3).status == MobiusStatus::none_up_to_bound);

    Field k3 = cyc(3);
    auto c = mobius_solver(express_sigma_on_x(cubic_param(k3), pt(k3, "1", "0", "0"),
                                              LineMobius::diagonal(k3.generator(), k3.one())),
                           3);
    REQUIRE(c.status == MobiusStatus::found);
    MobiusOverBase expected = mob(rf(k3, {"-z", "1"}), rf(k3, {"0", "1 - z"}), rf(k3, {"z - 1"}), rf(k3, {"-1", "z"}));
    CHECK(c.mobius->proportional_to(expected));

    auto id = mobius_solver(express_sigma_on_x(cubic_param(k3), pt(k3, "1", "0", "0"), LineMobius::identity(k3)), 3);
    REQUIRE(id.status == MobiusStatus::found);
    CHECK(is_identity(*id.mobius));
  }

  TEST_CASE("normal form of an order-3 automorphism") {
    Field k3 = cyc(3);
    FieldElement w = k3.generator();
    RatPoly f = RatPoly::from_multi(xy("x^3 - y", k3), "x", "y");
    RatPoly nu(k3, {rf(k3, {}), RatFunc::constant(w)});
    MobiusOverBase m = lemma31_formulas(f, nu);
    CHECK(m.gamma.is_zero());
    CHECK(m.beta.is_zero());
    CHECK(m.delta == RatFunc::constant(-w));
    CHECK(m.alpha == RatFunc::constant(-w * w));

    RatPoly id(k3, {rf(k3, {}), rf(k3, {"1"})});
    CHECK(is_identity(lemma31_formulas(f, id)));

    // a polynomial that is not an automorphism
    RatPoly bad(k3, {rf(k3, {}), rf(k3, {"2"})});
    CHECK_THROWS_AS(lemma31_formulas(f, bad), GaloisError);

    // cross-check with the solver on the cubic example
    RatPoly cubic = RatPoly::from_multi(xy("x^3 - 3*x*y - y^2 - y", k3), "x", "y");
    auto s = mobius_solver(express_sigma_on_x(cubic_param(k3), pt(k3, "1", "0", "0"),
                                              LineMobius::diagonal(w, k3.one())),
                           3);
    REQUIRE(s.mobius);
    CHECK(lemma31_formulas(cubic, polynomial_form(*s.mobius, cubic)).proportional_to(*s.mobius));
  }

  TEST_CASE("de Jonquieres maps from fractional-linear data") {
    Field k3 = cyc(3);
    ProjPoint p = pt(k3, "1", "0", "0");
    MobiusOverBase m = mob(rf(k3, {"-z", "1"}), rf(k3, {"0", "1 - z"}), rf(k3, {"z - 1"}), rf(k3, {"-1", "z"}));
    PlaneRationalMap J = jonquieres_builder(m, p);
    PlaneRationalMap printed({plane("(Y - z*Z)*X + Y*Z*(1 - z)", k3), plane("Y*((z - 1)*X + z*Y - Z)", k3),
                              plane("Z*((z - 1)*X + z*Y - Z)", k3)});
    CHECK(J == printed);
    CHECK(pencil_preserved(J, p));
    CHECK(preserves_curve(plane("X^3 - 3*X*Y*Z - Y^2*Z - Y*Z^2", k3), J));

    Field f3 = Fp(3);
    PlaneRationalMap J3 = jonquieres_builder(mob(rf(f3, {"1"}), rf(f3, {"0", "1"}), rf(f3, {}), rf(f3, {"1"})),
                                             pt(f3, "1", "0", "0"));
    CHECK(J3 == PlaneRationalMap({plane("X + Y", f3), plane("Y", f3), plane("Z", f3)}));

    CHECK(jonquieres_builder(MobiusOverBase::identity(k3), p) == PlaneRationalMap::identity(k3));

    // off the standard center the map still fixes the pencil
    ProjPoint q = pt(k3, "1", "2", "1");
    PlaneRationalMap Jq = jonquieres_builder(m, q);
    CHECK(pencil_preserved(Jq, q));
  }

  TEST_CASE("linear extensions") {
    Field k5 = cyc(5);
    Parametrization s = septic_param(k5);
    for (long e = 1; e <= 4; ++e)
      CHECK_FALSE(linear_extension_solver(s, LineMobius::diagonal(k5.generator().pow(e), k5.one())).matrix);
    auto id = linear_extension_solver(s, LineMobius::identity(k5));
    REQUIRE(id.matrix);
    CHECK(id.matrix->proportional_to(Matrix::identity(k5, 3)));

    Field q = Q();
    Parametrization rho = param(q, "u^2", "u*v", "v^2");
    LineMobius g(q.from_int(2), q.from_int(1), q.from_int(3), q.from_int(-1));
    auto lift = linear_extension_solver(rho, g);
    REQUIRE(lift.matrix);
    CHECK(lift.matrix->proportional_to(conic_lift(g)));
  }

  TEST_CASE("psi has the extension degree") {
    Field k3 = cyc(3), k8 = cyc(8), k5 = cyc(5), f3 = Fp(3);
    struct Case {
      Parametrization phi;
      ProjPoint p;
      int degree;
    };
    std::vector<Case> cases{{cubic_param(k3), pt(k3, "1", "0", "0"), 3},
                            {quartic_param(k8), pt(k8, "1", "0", "0"), 4},
                            {param(f3, "v^3", "u^3", "u^2*v - v^3"), pt(f3, "1", "0", "0"), 3},
                            {septic_param(k5), pt(k5, "1", "0", "0"), 5}};
    for (const auto& c : cases) {
      auto psi = projection_on_line(c.phi, c.p);
      CHECK(psi[0].degree() == c.degree);
      unsigned m = multiplicity_param(c.phi, c.p);
      CHECK(c.phi.degree() - static_cast<int>(m) == c.degree);
    }
  }

  TEST_CASE("deck verification is stable under coordinate changes") {
    Field k8 = cyc(8);
    Parametrization phi = quartic_param(k8);
    ProjPoint p = pt(k8, "1", "0", "0");
    std::vector<LineMobius> gs{LineMobius::diagonal(el("z^2", k8), k8.one()), LineMobius::diagonal(el("z", k8), k8.one()),
                               LineMobius(k8.zero(), k8.one(), k8.one(), k8.zero())};
    for (std::uint64_t s = 0; s < 10; ++s) {
      Matrix m = random_invertible(k8, 500 + s);
      Parametrization moved = phi.transformed(m);
      ProjPoint mp = ProjPoint::from_vector(m * p.to_vector());
      for (const auto& g : gs) CHECK(deck_verify(moved, mp, g) == deck_verify(phi, p, g));
    }
  }

  TEST_CASE("fractional-linear solutions satisfy the defining identity") {
    Field k3 = cyc(3);
    Parametrization phi = cubic_param(k3);
    ProjPoint p = pt(k3, "1", "0", "0");
    for (std::uint64_t s = 0; s < 5; ++s) {
      Matrix m = random_invertible(k3, 700 + s);
      Parametrization moved = phi.transformed(m);
      ProjPoint mp = ProjPoint::from_vector(m * p.to_vector());
      auto sx = express_sigma_on_x(moved, mp, LineMobius::diagonal(k3.generator(), k3.one()));
      auto r = mobius_solver(sx, 4);
      REQUIRE(r.mobius);
      auto y = sx.y;
      auto at = [&](const RatFunc& c) {
        RatFunc out(k3);
        for (int i = c.num().degree(); i >= 0; --i) out = out * y + RatFunc::constant(c.num().coeff(i));
        return out;
      };
      REQUIRE(r.mobius->alpha.is_polynomial());
      RatFunc lhs = sx.sigma_x * (at(r.mobius->gamma) * sx.x + at(r.mobius->delta));
      RatFunc rhs = at(r.mobius->alpha) * sx.x + at(r.mobius->beta);
      CHECK(lhs == rhs);
      CHECK_FALSE(r.mobius->determinant().is_zero());

      PlaneCurve c = PlaneCurve::from_parametrization(moved);
      PlaneRationalMap J = jonquieres_builder(*r.mobius, mp);
      CHECK(pencil_preserved(J, mp));
      CHECK(preserves_curve(c.implicit(), J));
      CHECK(restricts_to(J, moved, LineMobius::diagonal(k3.generator(), k3.one())));
    }
  }
}
