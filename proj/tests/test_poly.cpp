#include "doctest.h"
#include "support.hpp"

using namespace gt;

namespace {

MultiPoly random_poly(const Field& k, const VarList& vars, std::mt19937_64& rng, int max_deg = 3, int terms = 4) {
  MultiPoly p(k, vars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars.size(), 0);
    int budget = static_cast<int>(rng() % (max_deg + 1));
    for (int j = 0; j < budget; ++j) ++e[rng() % vars.size()];
    p += MultiPoly::monomial(k, vars, e, random_element(k, rng, 3));
  }
  return p;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("parsing") {
    Field k8 = cyc(8);
    MultiPoly F = plane("X^4 - 4*Z*Y*X^2 - Z*Y^3 + 2*Z^2*Y^2 - Y*Z^3", k8);
    CHECK(F.degree() == 4);
    CHECK(F.is_homogeneous());
    CHECK(F.size() == 5);

    MultiPoly zero = plane("0", Q());
    CHECK(zero.is_zero());
    CHECK(zero.degree() == kNegInfDegree);

    MultiPoly c = line("u*v^6 - u^7", cyc(5));
    CHECK(c.degree() == 7);
    CHECK(c.to_string() == "-u^7 + u*v^6");

    CHECK(plane("-X + 1/2*Y", Q()).coefficient({0, 1, 0}) == el("1/2", Q()));
    CHECK(plane("(z - 1)*X", cyc(3)).coefficient({1, 0, 0}) == el("z - 1", cyc(3)));
  }

  TEST_CASE("parse errors") {
    Field k = Q();
    CHECK_THROWS_AS(plane("2X", k), PolyError);
    CHECK_THROWS_AS(plane("X +", k), PolyError);
    CHECK_THROWS_AS(plane("W", k), PolyError);
    CHECK_THROWS_AS(plane("1/0", k), PolyError);
    CHECK_THROWS_AS(plane("(X + Y", k), PolyError);
    try {
      plane("X + * Y", k);
      FAIL("expected a parse error");
    } catch (const PolyError& e) {
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }

  TEST_CASE("arithmetic") {
    Field f3 = Fp(3);
    CHECK(plane("X + Y", f3).pow(3) == plane("X^3 + Y^3", f3));
    Field q = Q();
    CHECK(plane("X^2 - Y^2", q).divide_exact(plane("X - Y", q)) == plane("X + Y", q));
    CHECK_THROWS_AS(plane("X^2 + Y^2", q).divide_exact(plane("X - Y", q)), PolyError);
    CHECK(plane("X^4 - 4*Z*Y*X^2", q).derivative("X") == plane("4*X^3 - 8*Z*Y*X", q));
  }

  TEST_CASE("gcd of binary forms") {
    Field k5 = cyc(5);
    CHECK(gcd_forms(line("u^5*(u^2 + v^2)", k5), line("v^5*(u^2 + v^2)", k5)) == line("u^2 + v^2", k5));
    MultiPoly f = line("2*u^3 - 4*v^3", Q());
    CHECK(gcd_forms(f, line("0", Q())) == f.monic());
    CHECK(gcd_forms(line("u^6 - v^6", Q()), line("u^2 + v^2", Q())) == line("1", Q()));
  }

  TEST_CASE("resultants") {
    Field q = Q();
    VarList v{"x", "y", "t"};
    MultiPoly r = resultant(parse_poly("x - (t + t^2)", q, v), parse_poly("y - t^3", q, v), "t");
    MultiPoly target = parse_poly("y^2 - x^3 + 3*x*y + y", q, v);
    REQUIRE(!r.is_zero());
    CHECK(r.degree() == 3);
    CHECK(r.exact_div(target).has_value());
    CHECK(r.exact_div(target)->is_constant());
    // oracle: the curve contains (t + t^2, t^3)
    MultiPoly tt = parse_poly("t", q, v);
    CHECK(r.substitute({{"x", tt + tt * tt}, {"y", tt.pow(3)}, {"t", tt}}).is_zero());

    VarList w{"x", "a", "b"};
    MultiPoly ab = resultant(parse_poly("x - a", q, w), parse_poly("x - b", q, w), "x");
    CHECK(ab == parse_poly("a - b", q, w));

    MultiPoly f = parse_poly("x^2 + a*x + b", q, w);
    CHECK(resultant(f, f, "x").is_zero());
    CHECK_THROWS(resultant(parse_poly("a", q, w), f, "x"));
  }

  TEST_CASE("substitution") {
    Field q = Q();
    VarList v{"x", "y", "t"};
    MultiPoly f = parse_poly("x^4 - 4*y*x^2 - y^3 + 2*y^2 - y", q, v);
    MultiPoly t = parse_poly("t", q, v);
    CHECK(f.substitute({{"x", t + t.pow(3)}, {"y", t.pow(4)}, {"t", t}}).is_zero());

    Field f3 = Fp(3);
    MultiPoly F = plane("X^3 - Y^2*X + Z^3", f3);
    CHECK(F.substitute({{"X", plane("X + Y", f3)}, {"Y", plane("Y", f3)}, {"Z", plane("Z", f3)}}) == F);
    CHECK(F.compose({plane("X", f3), plane("Y", f3), plane("Z", f3)}) == F);
  }

  TEST_CASE("homogenize and dehomogenize") {
    Field q = Q();
    MultiPoly f = xy("x^3 - 3*x*y - y^2 - y", q);
    MultiPoly H = homogenize(f, "Z", 3).rename(plane_vars());
    CHECK(H == plane("X^3 - 3*X*Y*Z - Y^2*Z - Y*Z^2", q));
    MultiPoly G = plane("X^4 - 4*Z*Y*X^2 - Z*Y^3 + 2*Z^2*Y^2 - Y*Z^3", q);
    CHECK(dehomogenize(G, "Z").rename({"x", "y"}) == xy("x^4 - 4*y*x^2 - y^3 + 2*y^2 - y", q));
    MultiPoly one = parse_poly("1", q, {"x"});
    CHECK(homogenize(one, "Z", 0).is_constant());
    CHECK_THROWS(homogenize(f, "Z", 2));
    CHECK(dehomogenize(homogenize(f, "Z", 5), "Z") == f);
  }

  TEST_CASE("gcd reconstructs inputs") {
    std::mt19937_64 rng(11);
    for (Field k : {Q(), cyc(3), Fp(7)})
      for (int n = 0; n < 20; ++n) {
        MultiPoly a = random_poly(k, {"x", "y"}, rng), b = random_poly(k, {"x", "y"}, rng),
                  c = random_poly(k, {"x", "y"}, rng);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        MultiPoly g = poly_gcd(a * c, b * c);
        REQUIRE(!g.is_zero());
        CHECK((a * c).divisible_by(g));
        CHECK((b * c).divisible_by(g));
        CHECK(g.divisible_by(c.monic()));
        CHECK(poly_gcd(b * c, a * c) == g);
      }
  }

  TEST_CASE("resultant sign rule and multiplicativity") {
    std::mt19937_64 rng(23);
    Field q = Q();
    VarList v{"x"};
    auto rp = [&](int deg) {
      MultiPoly p = MultiPoly::monomial(q, v, {static_cast<unsigned>(deg)}, random_nonzero(q, rng));
      for (int d = 0; d < deg; ++d) p += MultiPoly::monomial(q, v, {static_cast<unsigned>(d)}, random_element(q, rng));
      return p;
    };
    for (int n = 0; n < 20; ++n) {
      int df = 1 + n % 3, dg = 1 + (n / 3) % 3;
      MultiPoly f = rp(df), g = rp(dg), h = rp(2);
      FieldElement rfg = resultant(f, g, "x").constant_term();
      FieldElement rgf = resultant(g, f, "x").constant_term();
      CHECK(rgf == ((df * dg) % 2 ? -rfg : rfg));
      CHECK(resultant(f, g * h, "x").constant_term() == rfg * resultant(f, h, "x").constant_term());
    }
  }

  TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(29);
    Field k = cyc(5);
    VarList v{"x", "y"};
    for (int n = 0; n < 500; ++n) {
      MultiPoly p = random_poly(k, v, rng, 2, 3), q = random_poly(k, v, rng, 2, 3);
      std::vector<MultiPoly> img{random_poly(k, v, rng, 2, 2), random_poly(k, v, rng, 2, 2)};
      REQUIRE((p * q).compose(img) == p.compose(img) * q.compose(img));
      REQUIRE((p + q).compose(img) == p.compose(img) + q.compose(img));
    }
  }

  TEST_CASE("render and parse round-trip") {
    std::mt19937_64 rng(31);
    for (Field k : {Q(), cyc(8), Fp(5)})
      for (int n = 0; n < 100; ++n) {
        MultiPoly p = random_poly(k, plane_vars(), rng, 4, 5);
        REQUIRE(parse_poly(p.to_string(), k, plane_vars()) == p);
      }
  }
}
