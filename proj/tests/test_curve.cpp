#include "doctest.h"
#include "support.hpp"

using namespace gt;

namespace {

const char* kQuartic = "X^4 - 4*Z*Y*X^2 - Z*Y^3 + 2*Z^2*Y^2 - Y*Z^3";
const char* kQuarticMoved = "X^2*Y^2 + 6*X^2*Y*Z + X^2*Z^2 + 4*Y^2*Z^2";

Parametrization septic(const Field& k) {
  return param(k, "u*v^6 - u^7", "u^5*(u^2 + v^2)", "v^5*(u^2 + v^2)");
}

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("points") {
    Field q = Q();
    ProjPoint p = pt(q, "2", "4", "6");
    CHECK(p == pt(q, "1", "2", "3"));
    CHECK(p.to_string() == "[1:2:3]");
    CHECK(pt(q, "0", "0", "5") == ProjPoint::coordinate(q, 2));
    try {
      pt(q, "0", "0", "0");
      FAIL("expected an error");
    } catch (const CurveError& e) {
      CHECK(std::string(e.what()) == "not a projective point");
    }
  }

  TEST_CASE("curves from implicit equations") {
    CHECK(PlaneCurve::from_implicit(plane(kQuartic, cyc(8))).degree() == 4);
    CHECK(PlaneCurve::from_implicit(plane("X^3 - Y^2*X + Z^3", Fp(3))).degree() == 3);
    PlaneCurve l = PlaneCurve::from_implicit(plane("X", Q()));
    CHECK(l.degree() == 1);
    CHECK(l.contains(pt(Q(), "0", "1", "1")));
    CHECK_THROWS_AS(PlaneCurve::from_implicit(plane("X^2 + Y", Q())), CurveError);
    CHECK_THROWS_AS(PlaneCurve::from_implicit(plane("0", Q())), CurveError);
  }

  TEST_CASE("curves from parametrizations") {
    Field k3 = cyc(3);
    PlaneCurve c = PlaneCurve::from_parametrization(param(k3, "u*v^2 + u^2*v", "u^3", "v^3"));
    CHECK(c.degree() == 3);

    Field k5 = cyc(5);
    Parametrization s = septic(k5);
    CHECK(s.degree() == 7);
    const auto& f = s.components();
    CHECK(gcd_forms(gcd_forms(f[0], f[1]), f[2]).degree() == 0);
    // (u^2 + v^2) does not divide u*v^6 - u^7
    CHECK_FALSE(f[0].divisible_by(line("u^2 + v^2", k5)));

    PlaneCurve l = PlaneCurve::from_parametrization(param(Q(), "u", "v", "0"));
    CHECK(l.degree() == 1);
    CHECK(l.implicit() == plane("Z", Q()));

    CHECK_THROWS_AS(param(Q(), "0", "0", "0"), CurveError);
    CHECK_THROWS_AS(param(Q(), "u", "2*u", "3*u"), CurveError);
    CHECK_THROWS_AS(param(Q(), "u^2", "v", "u"), CurveError);
    // common factors are removed
    CHECK(param(Q(), "u^2", "u*v", "u*(u + v)").degree() == 1);
  }

  TEST_CASE("implicitization") {
    Field q = Q();
    MultiPoly F = implicitize(param(q, "u*v^2 + u^2*v", "u^3", "v^3"));
    CHECK(F == plane("X^3 - 3*X*Y*Z - Y^2*Z - Y*Z^2", q));

    MultiPoly G = implicitize(param(q, "u*v^3 + u^3*v", "u^4", "v^4"));
    CHECK(G == plane(kQuartic, q));

    CHECK(implicitize(param(q, "u", "v", "0")) == plane("Z", q));

    Field k5 = cyc(5);
    Parametrization s = septic(k5);
    MultiPoly H = implicitize(s);
    CHECK(H.degree() == 7);
    CHECK(H.compose({s[0], s[1], s[2]}).is_zero());
  }

  TEST_CASE("multiplicity from the implicit equation") {
    Field k8 = cyc(8);
    CHECK(multiplicity_implicit(plane(kQuartic, k8), pt(k8, "1", "0", "0")) == 0);
    MultiPoly moved = plane(kQuarticMoved, k8);
    for (std::size_t i = 0; i < 3; ++i) CHECK(multiplicity_implicit(moved, ProjPoint::coordinate(k8, i)) == 2);
    CHECK(multiplicity_implicit(plane("X^3 - 3*X*Y*Z - Y^2*Z - Y*Z^2", Q()), pt(Q(), "1", "0", "0")) == 0);
    CHECK(multiplicity_implicit(plane("X^3 - 3*X*Y*Z - Y^2*Z - Y*Z^2", Q()), pt(Q(), "-1", "1", "1")) == 2);
  }

  TEST_CASE("multiplicity from the parametrization") {
    Field k5 = cyc(5);
    CHECK(multiplicity_param(septic(k5), pt(k5, "1", "0", "0")) == 2);
    Field k3 = cyc(3);
    CHECK(multiplicity_param(param(k3, "u*v^2 + u^2*v", "u^3", "v^3"), pt(k3, "1", "0", "0")) == 0);
    CHECK(multiplicity_param(param(k3, "u*v^2 + u^2*v", "u^3", "v^3"), pt(k3, "5", "7", "1")) == 0);
  }

  TEST_CASE("points of large multiplicity") {
    Field k5 = cyc(5);
    PlaneCurve septic_curve = PlaneCurve::from_parametrization(septic(k5));
    auto none = has_point_of_multiplicity_ge(septic_curve, 3);
    CHECK(none.status == CertStatus::no);
    CHECK(none.gcd_degree == 0);

    Field k8 = cyc(8);
    auto yes = has_point_of_multiplicity_ge(PlaneCurve::from_implicit(plane(kQuarticMoved, k8)), 2);
    REQUIRE(yes.status == CertStatus::yes);
    REQUIRE(yes.witness);
    CHECK(yes.witness_multiplicity >= 2);

    CHECK(has_point_of_multiplicity_ge(PlaneCurve::from_implicit(plane("Y^2 - X*Z", Q())), 2).status == CertStatus::no);
    CHECK_THROWS_AS(has_point_of_multiplicity_ge(PlaneCurve::from_implicit(plane("X^3 - Y^2*X + Z^3", Fp(3))), 2),
                    CurveError);
  }

  TEST_CASE("both multiplicity methods agree on sampled points") {
    struct Case {
      Field k;
      Parametrization phi;
      std::vector<ProjPoint> singular;
      std::string implicit;  // needed where the field is too small to interpolate
    };
    Field k3 = cyc(3), k8 = cyc(8), k5 = cyc(5), f3 = Fp(3);
    std::vector<Case> cases{
        {k3, param(k3, "u*v^2 + u^2*v", "u^3", "v^3"), {pt(k3, "-1", "1", "1")}, ""},
        {k8, param(k8, "u*v^3 + u^3*v", "u^4", "v^4"),
         {pt(k8, "0", "1", "1"), pt(k8, "z^3 + z", "-1", "1"), pt(k8, "z^3 + z", "1", "-1")}, ""},
        {k5, septic(k5), {pt(k5, "1", "0", "0"), pt(k5, "1", "-1", "0")}, ""},
        {f3, param(f3, "v^3", "u^3", "u^2*v - v^3"), {pt(f3, "1", "0", "2")}, "X^3 - Y^2*X + Z^3"},
    };
    std::mt19937_64 rng(41);
    for (const auto& c : cases) {
      PlaneCurve curve = c.implicit.empty() ? PlaneCurve::from_parametrization(c.phi)
                                            : PlaneCurve::from_both(plane(c.implicit, c.k), c.phi);
      std::vector<ProjPoint> pts = c.singular;
      for (int s = 0; pts.size() < 20; ++s) {
        // points on the curve, plus a few off it
        FieldElement a = random_element(c.k, rng, 4), b = random_nonzero(c.k, rng);
        if (s % 4 == 3) {
          pts.push_back(ProjPoint(random_element(c.k, rng), random_element(c.k, rng), c.k.one()));
        } else {
          pts.push_back(c.phi.at(a, b));
        }
      }
      unsigned budget = 0;
      for (const auto& p : pts) {
        unsigned mi = multiplicity_implicit(curve, p);
        CHECK(mi == multiplicity_param(c.phi, p));
      }
      for (const auto& p : c.singular) {
        unsigned m = multiplicity_implicit(curve, p);
        CHECK(m >= 2);
        budget += m * (m - 1);
      }
      int d = curve.degree();
      CHECK(budget <= static_cast<unsigned>((d - 1) * (d - 2)));
    }
  }

  TEST_CASE("multiplicity is invariant under coordinate changes") {
    Field k8 = cyc(8);
    PlaneCurve c = PlaneCurve::from_implicit(plane(kQuartic, k8));
    std::vector<ProjPoint> pts{pt(k8, "0", "1", "1"), pt(k8, "z^3 + z", "-1", "1"), pt(k8, "1", "0", "0"),
                               pt(k8, "0", "0", "1")};
    for (std::uint64_t s = 0; s < 10; ++s) {
      Matrix m = random_invertible(k8, 100 + s);
      PlaneCurve moved = linear_pushforward(c, m);
      for (const auto& p : pts)
        CHECK(multiplicity_implicit(moved, ProjPoint::from_vector(m * p.to_vector())) == multiplicity_implicit(c, p));
    }
  }

  TEST_CASE("implicit and parametric forms are consistent") {
    Field k8 = cyc(8);
    Parametrization phi = param(k8, "u*v^3 + u^3*v", "u^4", "v^4");
    CHECK_NOTHROW(PlaneCurve::from_both(plane(kQuartic, k8), phi));
    CHECK_THROWS_AS(PlaneCurve::from_both(plane("X^4 - Y^4", k8), phi), CurveError);
  }
}
