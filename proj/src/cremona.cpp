#include "galcrem/cremona.hpp"

namespace galcrem {

PairingReport kodaira_pairing(int d, const std::vector<unsigned>& mults) {
  if (d < 1) throw CremonaError("degree must be positive");
  PairingReport r;
  r.degree = d;
  r.multiplicities = mults;
  r.pairing = d - 6;
  for (unsigned m : mults) r.coefficients.push_back(2 - static_cast<int>(m));
  r.line_equivalence_guaranteed = d < 6;
  return r;
}

std::string to_string(LineEquivalence e) {
  return e == LineEquivalence::equivalent_to_line ? "equivalent_to_line" : "unknown";
}

LineEquivalence line_equivalence_decision(const PlaneCurve& c) {
  if (!c.param()) throw CremonaError("rationality is not established: the curve has no parametrization");
  return c.degree() < 6 ? LineEquivalence::equivalent_to_line : LineEquivalence::unknown;
}

Matrix quadratic_frame(const std::array<ProjPoint, 3>& points) {
  const Field& k = points[0].field();
  Matrix l(k, 3, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) l(i, j) = points[j][i];
  if (l.determinant().is_zero()) throw CremonaError("the three points are collinear");
  return l;
}

PlaneRationalMap step_map(const ChainStep& s, const Field& field) {
  if (const auto* lin = std::get_if<LinearStep>(&s)) return PlaneRationalMap::linear(lin->matrix);
  Matrix l = quadratic_frame(std::get<QuadraticStep>(s).points);
  return map_compose(PlaneRationalMap::linear(l),
                     map_compose(PlaneRationalMap::standard_quadratic(field), PlaneRationalMap::linear(*l.inverse())));
}

namespace {

PlaneRationalMap step_inverse(const ChainStep& s, const Field& field) {
  if (const auto* lin = std::get_if<LinearStep>(&s)) {
    auto inv = lin->matrix.inverse();
    if (!inv) throw CremonaError("singular linear step");
    return PlaneRationalMap::linear(*inv);
  }
  return step_map(s, field);  // conjugates of the standard involution are involutions
}

QuadraticImage apply_quadratic(const PlaneCurve& c, const QuadraticStep& step, bool require_on_curve) {
  Matrix l = quadratic_frame(step.points);
  StepRecord rec;
  rec.kind = "std_quadratic_at";
  rec.degree_before = c.degree();
  for (std::size_t i = 0; i < 3; ++i) {
    rec.multiplicities[i] = multiplicity_implicit(c, step.points[i]);
    if (require_on_curve && rec.multiplicities[i] == 0)
      throw CremonaError("point " + step.points[i].to_string() + " is not on the curve");
  }
  PlaneCurve moved = linear_pushforward(c, *l.inverse());
  QuadraticPushforward q = [&] {
    try {
      return std_quadratic_pushforward(moved);
    } catch (const MapError& e) {
      throw CremonaError(std::string("curve is contracted: ") + e.what());
    }
  }();
  PlaneCurve image = linear_pushforward(q.image, l);
  rec.degree_after = image.degree();
  const auto& m = rec.multiplicities;
  rec.degree_formula_holds = q.multiplicities == m && rec.degree_after == q.expected_degree &&
                             rec.degree_after == 2 * rec.degree_before - static_cast<int>(m[0] + m[1] + m[2]);
  return {image, step, rec};
}

}  // namespace

QuadraticImage quadratic_at_three_points(const PlaneCurve& c, const ProjPoint& p1, const ProjPoint& p2,
                                         const ProjPoint& p3) {
  return apply_quadratic(c, QuadraticStep{{p1, p2, p3}}, true);
}

Matrix conic_lift(const LineMobius& g) {
  const Field& k = g.field();
  FieldElement a = g.a(), b = g.b(), c = g.c(), d = g.d(), two = k.from_int(2);
  Matrix m = Matrix::from_rows(k, {{a * a, two * a * b, b * b}, {a * c, a * d + b * c, b * d}, {c * c, two * c * d, d * d}});
  return m * g.determinant().inverse();
}

ChainReplay replay(const ReductionChain& chain, const PlaneCurve& start) {
  ChainReplay out;
  out.curves.push_back(start);
  for (const auto& s : chain.steps) {
    const PlaneCurve& cur = out.curves.back();
    if (const auto* lin = std::get_if<LinearStep>(&s)) {
      PlaneCurve next = linear_pushforward(cur, lin->matrix);
      StepRecord rec;
      rec.kind = "linear";
      rec.degree_before = cur.degree();
      rec.degree_after = next.degree();
      rec.degree_formula_holds = rec.degree_before == rec.degree_after;
      out.records.push_back(rec);
      out.curves.push_back(next);
    } else {
      auto q = apply_quadratic(cur, std::get<QuadraticStep>(s), false);
      out.records.push_back(q.record);
      out.curves.push_back(q.image);
    }
  }
  return out;
}

ReductionChain greedy_reduction(const PlaneCurve& c, const std::vector<ProjPoint>& hints, unsigned max_steps) {
  const Field& k = c.field();
  ReductionChain chain;
  PlaneCurve cur = c;
  std::vector<ProjPoint> carried = hints;
  for (unsigned step = 0; step < max_steps && cur.degree() > 1; ++step) {
    std::vector<ProjPoint> cand;
    auto add = [&](const ProjPoint& p) {
      if (std::find(cand.begin(), cand.end(), p) == cand.end()) cand.push_back(p);
    };
    for (const auto& p : carried) add(p);
    if (cur.param())
      for (long s = 0; s <= 4; ++s) add(cur.param()->at(k.from_int(s), k.one()));
    if (cur.param()) add(cur.param()->at(k.one(), k.zero()));
    std::vector<std::pair<unsigned, ProjPoint>> on;
    for (const auto& p : cand)
      if (unsigned m = multiplicity_implicit(cur, p); m > 0) on.push_back({m, p});
    std::stable_sort(on.begin(), on.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    std::optional<std::array<std::size_t, 3>> best;
    unsigned best_sum = 0;
    for (std::size_t i = 0; i < on.size(); ++i)
      for (std::size_t j = i + 1; j < on.size(); ++j)
        for (std::size_t l = j + 1; l < on.size(); ++l) {
          unsigned sum = on[i].first + on[j].first + on[l].first;
          if (sum <= best_sum || static_cast<int>(sum) <= cur.degree()) continue;
          Matrix f(k, 3, 3);
          for (std::size_t r = 0; r < 3; ++r) {
            f(r, 0) = on[i].second[r];
            f(r, 1) = on[j].second[r];
            f(r, 2) = on[l].second[r];
          }
          if (f.determinant().is_zero()) continue;
          best = {i, j, l};
          best_sum = sum;
        }
    if (!best) break;
    QuadraticStep q{{on[(*best)[0]].second, on[(*best)[1]].second, on[(*best)[2]].second}};
    PlaneCurve next = [&] {
      try {
        return apply_quadratic(cur, q, true).image;
      } catch (const CremonaError&) {
        return cur;
      }
    }();
    if (next.degree() >= cur.degree()) break;
    PlaneRationalMap m = step_map(q, k);
    std::vector<ProjPoint> moved(q.points.begin(), q.points.end());
    for (const auto& p : cand)
      if (auto img = map_apply(m, p)) moved.push_back(*img);
    carried = moved;
    chain.steps.push_back(q);
    cur = next;
  }
  return chain;
}

PlaneRationalMap chain_map(const ReductionChain& chain, const Field& field) {
  PlaneRationalMap cur = PlaneRationalMap::identity(field);
  for (const auto& s : chain.steps) cur = map_compose(step_map(s, field), cur);
  return cur;
}

PlaneRationalMap chain_inverse(const ReductionChain& chain, const Field& field) {
  PlaneRationalMap cur = PlaneRationalMap::identity(field);
  for (const auto& s : chain.steps) cur = map_compose(cur, step_inverse(s, field));
  return cur;
}

PlaneRationalMap conjugate_extension(const ReductionChain& chain, const Matrix& end_automorphism) {
  const Field& k = end_automorphism.field();
  PlaneRationalMap cur = PlaneRationalMap::identity(k);
  for (const auto& s : chain.steps) cur = map_compose(step_map(s, k), cur);
  cur = map_compose(PlaneRationalMap::linear(end_automorphism), cur);
  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) cur = map_compose(step_inverse(*it, k), cur);
  return cur;
}

std::optional<EndAutomorphism> end_automorphism(const ReductionChain& chain, const Parametrization& phi,
                                                const LineMobius& g) {
  const Field& k = phi.field();
  std::array<MultiPoly, 3> comps = phi.components();
  for (const auto& s : chain.steps) comps = Parametrization(step_map(s, k).on(comps)).components();
  Parametrization end(comps);
  auto lin = linear_extension_solver(end, g);
  if (!lin.matrix) return std::nullopt;
  EndAutomorphism out{end, *lin.matrix, std::nullopt, true};

  // On Y^2 = XZ the end parametrization factors as rho o H with H in Aut(P^1).
  const auto& f = end.components();
  if (end.degree() == 2 && (f[1] * f[1] - f[0] * f[2]).is_zero() && !f[0].is_zero() && !f[1].is_zero()) {
    // f = lambda * (a^2, a b, b^2) with a = gcd(f0, f1).
    MultiPoly a = gcd_forms(f[0], f[1]);
    MultiPoly lambda = f[0].divide_exact(a * a);
    if (a.degree() == 1 && lambda.is_constant()) {
      MultiPoly b = f[1].divide_exact(a) * lambda.constant_term().inverse();
      LineMobius H(a.coefficient({1, 0}), a.coefficient({0, 1}), b.coefficient({1, 0}), b.coefficient({0, 1}));
      Matrix lift = conic_lift(H * g * H.inverse());
      out.conic_lift = lift;
      out.lifts_agree = lift.proportional_to(out.matrix);
    }
  }
  return out;
}

std::optional<PlaneRationalMap> chain_extension(const ReductionChain& chain, const Parametrization& phi,
                                                const LineMobius& g) {
  auto end = end_automorphism(chain, phi, g);
  if (!end || !end->lifts_agree) return std::nullopt;
  return conjugate_extension(chain, end->matrix);
}

}  // namespace galcrem
