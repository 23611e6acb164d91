#include "galcrem/scenario.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace galcrem {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- text forms

Field parse_field(const std::string& text) {
  static const std::regex rational(R"(\s*(Q|QQ|rational)\s*)");
  static const std::regex cyclo(R"(\s*(?:Q\(zeta_?(\d+)\)|cyclotomic\((\d+)\))\s*)");
  static const std::regex prime(R"(\s*(?:F_?(\d+)|GF\((\d+)\)|prime\((\d+)\))\s*)");
  std::smatch m;
  try {
    if (std::regex_match(text, rational)) return Field::rational();
    if (std::regex_match(text, m, cyclo)) {
      std::string n = m[1].matched ? m[1].str() : m[2].str();
      return Field::make(FieldDescriptor::cyclotomic(std::stoull(n)));
    }
    if (std::regex_match(text, m, prime)) {
      std::string p = m[1].matched ? m[1].str() : m[2].matched ? m[2].str() : m[3].str();
      return Field::make(FieldDescriptor::prime(std::stoull(p)));
    }
  } catch (const FieldError& e) {
    throw ScenarioError(std::string("field: ") + e.what());
  } catch (const std::out_of_range&) {
    throw ScenarioError("field: number out of range in '" + text + "'");
  }
  throw ScenarioError("field: unrecognized field '" + text + "' (expected Q, Q(zeta_n) or F_p)");
}

std::string field_name(const Field& k) { return k.descriptor().to_string(); }

ProjPoint parse_point(const std::string& text, const Field& k) {
  std::string t = text;
  for (char& c : t)
    if (c == '[' || c == ']') c = ' ';
  char sep = t.find(':') != std::string::npos ? ':' : ',';
  std::vector<FieldElement> v;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, sep)) v.push_back(parse_element(item, k));
  if (v.size() != 3) throw ScenarioError("point '" + text + "' needs three coordinates");
  return ProjPoint::from_vector(v);
}

namespace {

std::string scalar_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ScenarioError(where + ": expected a field element string or integer");
}

ProjPoint point_from_json(const json& j, const Field& k, const std::string& where) {
  try {
    if (j.is_string()) return parse_point(j.get<std::string>(), k);
    if (!j.is_array() || j.size() != 3) throw ScenarioError(where + ": expected three coordinates");
    std::vector<FieldElement> v;
    for (std::size_t i = 0; i < 3; ++i) v.push_back(parse_element(scalar_text(j[i], where), k));
    return ProjPoint::from_vector(v);
  } catch (const CurveError& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

Matrix matrix_from_json(const json& j, const Field& k, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw ScenarioError(where + ": expected a " + std::to_string(n) + "x" +
                                                          std::to_string(n) + " matrix");
  Matrix m(k, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ScenarioError(where + ": row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_element(scalar_text(j[r][c], where), k);
  }
  return m;
}

MultiPoly poly_from_json(const json& j, const Field& k, const VarList& vars, const std::string& where) {
  if (!j.is_string()) throw ScenarioError(where + ": expected a polynomial string");
  try {
    return parse_poly(j.get<std::string>(), k, vars);
  } catch (const PolyError& e) {
    throw ScenarioError(where + ": " + e.what());
  }
}

PlaneRationalMap map_from_json(const json& j, const Field& k, const std::string& where) {
  try {
    if (j.contains("linear")) return PlaneRationalMap::linear(matrix_from_json(j["linear"], k, 3, where + ".linear"));
    if (j.contains("components")) {
      const json& c = j["components"];
      if (!c.is_array() || c.size() != 3) throw ScenarioError(where + ".components: expected three polynomials");
      return PlaneRationalMap({poly_from_json(c[0], k, plane_vars(), where + ".components[0]"),
                               poly_from_json(c[1], k, plane_vars(), where + ".components[1]"),
                               poly_from_json(c[2], k, plane_vars(), where + ".components[2]")});
    }
  } catch (const MapError& e) {
    throw ScenarioError(where + ": " + e.what());
  }
  throw ScenarioError(where + ": expected \"linear\" or \"components\"");
}

ReductionChain chain_from_json(const json& j, const Field& k) {
  if (!j.contains("steps") || !j["steps"].is_array()) throw ScenarioError("chain: expected a \"steps\" array");
  ReductionChain ch;
  std::size_t i = 0;
  for (const auto& s : j["steps"]) {
    std::string where = "chain.steps[" + std::to_string(i++) + "]";
    if (s.contains("linear")) {
      Matrix m = matrix_from_json(s["linear"], k, 3, where + ".linear");
      if (m.determinant().is_zero()) throw ScenarioError(where + ": singular matrix");
      ch.steps.push_back(LinearStep{m});
    } else if (s.contains("std_quadratic_at")) {
      const json& p = s["std_quadratic_at"];
      if (!p.is_array() || p.size() != 3) throw ScenarioError(where + ": expected three points");
      QuadraticStep q{{point_from_json(p[0], k, where), point_from_json(p[1], k, where), point_from_json(p[2], k, where)}};
      try {
        quadratic_frame(q.points);
      } catch (const CremonaError& e) {
        throw ScenarioError(where + ": " + e.what());
      }
      ch.steps.push_back(q);
    } else {
      throw ScenarioError(where + ": expected \"linear\" or \"std_quadratic_at\"");
    }
  }
  return ch;
}

ExtensionClass extension_class_from(const std::string& s, const std::string& where) {
  for (auto c : {ExtensionClass::jonquieres, ExtensionClass::cremona_only, ExtensionClass::linear,
                 ExtensionClass::none_found, ExtensionClass::undetermined})
    if (to_string(c) == s) return c;
  throw ScenarioError(where + ": unknown verdict '" + s + "'");
}

Expectations expectations_from_json(const json& j) {
  Expectations e;
  if (j.contains("degree")) e.degree = j["degree"].get<unsigned>();
  if (j.contains("galois")) {
    const json& g = j["galois"];
    if (g.is_boolean()) e.galois = g.get<bool>() ? GaloisVerdict::galois : GaloisVerdict::not_galois;
    else if (g == "undetermined") e.galois = GaloisVerdict::undetermined;
    else throw ScenarioError("expected.galois: expected true, false or \"undetermined\"");
  }
  if (j.contains("elements"))
    for (const auto& [k, v] : j["elements"].items())
      e.elements[k] = extension_class_from(v.get<std::string>(), "expected.elements." + k);
  if (j.contains("proven"))
    for (const auto& [k, v] : j["proven"].items()) e.proven[k] = v.get<bool>();
  if (j.contains("jonquieres")) e.jonquieres = j["jonquieres"].get<bool>();
  if (j.contains("cremona")) e.cremona = j["cremona"].get<bool>();
  if (j.contains("extendable_elements")) e.extendable = j["extendable_elements"].get<std::vector<std::string>>();
  return e;
}

Field field_from_json(const json& f) {
  if (!f.is_object()) return parse_field(scalar_text(f, "field"));
  std::string kind = f.value("kind", "");
  auto number = [&](const char* key) {
    if (!f.contains(key) || !f[key].is_number_unsigned())
      throw ScenarioError(std::string("field: \"") + kind + "\" needs a positive integer \"" + key + "\"");
    return f[key].get<std::uint64_t>();
  };
  try {
    if (kind == "rational") return Field::rational();
    if (kind == "cyclotomic") return Field::make(FieldDescriptor::cyclotomic(number("n")));
    if (kind == "prime") return Field::make(FieldDescriptor::prime(number("p")));
  } catch (const FieldError& e) {
    throw ScenarioError(std::string("field: ") + e.what());
  }
  throw ScenarioError("field: unknown kind '" + kind + "' (expected rational, cyclotomic or prime)");
}

Scenario from_json(const json& j, const std::string& origin) {
  if (!j.is_object()) throw ScenarioError(origin + ": expected a JSON object");
  if (!j.contains("field")) throw ScenarioError(origin + ": missing \"field\"");
  Field k = field_from_json(j["field"]);
  const json& cj = j.contains("curve") ? j["curve"] : j;
  std::optional<MultiPoly> F;
  std::optional<Parametrization> phi;
  if (cj.contains("implicit")) F = poly_from_json(cj["implicit"], k, plane_vars(), "curve.implicit");
  if (cj.contains("param")) {
    const json& p = cj["param"];
    if (!p.is_array() || p.size() != 3) throw ScenarioError("curve.param: expected three binary forms");
    try {
      phi = Parametrization({poly_from_json(p[0], k, line_vars(), "curve.param[0]"),
                             poly_from_json(p[1], k, line_vars(), "curve.param[1]"),
                             poly_from_json(p[2], k, line_vars(), "curve.param[2]")});
    } catch (const CurveError& e) {
      throw ScenarioError(std::string("curve.param: ") + e.what());
    }
  }
  if (!F && !phi) throw ScenarioError(origin + ": curve needs \"implicit\" and/or \"param\"");
  auto curve = [&] {
    try {
      if (F && phi) return PlaneCurve::from_both(*F, *phi);
      if (F) return PlaneCurve::from_implicit(*F);
      return PlaneCurve::from_parametrization(*phi);
    } catch (const CurveError& e) {
      throw ScenarioError(std::string("curve: ") + e.what());
    }
  }();
  Scenario s{j.value("name", origin), k, curve, F.has_value(), std::nullopt, {}, {}, std::nullopt, std::nullopt, {}, {}};
  if (j.contains("point")) s.point = point_from_json(j["point"], k, "point");
  if (j.contains("generators")) {
    std::size_t i = 0;
    for (const auto& g : j["generators"]) {
      std::string where = "generators[" + std::to_string(i++) + "]";
      Matrix m = matrix_from_json(g, k, 2, where);
      if (m.determinant().is_zero()) throw ScenarioError(where + ": generator matrix is not invertible");
      s.generators.push_back(LineMobius(m));
    }
  }
  if (j.contains("singular_points")) {
    std::size_t i = 0;
    for (const auto& p : j["singular_points"])
      s.singular_points.push_back(point_from_json(p, k, "singular_points[" + std::to_string(i++) + "]"));
  }
  if (j.contains("chain")) s.chain = chain_from_json(j["chain"], k);
  if (j.contains("map")) s.map = map_from_json(j["map"], k, "map");
  if (j.contains("known_maps")) {
    std::size_t i = 0;
    for (const auto& km : j["known_maps"]) {
      std::string where = "known_maps[" + std::to_string(i++) + "]";
      s.known_maps.push_back({km.value("element", "sigma"), map_from_json(km, k, where), km.value("invariant", false)});
    }
  }
  if (j.contains("expected")) s.expected = expectations_from_json(j["expected"]);
  return s;
}

// ---------------------------------------------------------------- built-ins

const char* kCubicOmega = R"js({
  "name": "cubic-omega",
  "field": "Q(zeta_3)",
  "curve": {"param": ["u*v^2 + u^2*v", "u^3", "v^3"]},
  "point": ["1", "0", "0"],
  "generators": [[["z", "0"], ["0", "1"]]],
  "singular_points": [["-1", "1", "1"]],
  "known_maps": [{"element": "sigma",
                  "components": ["(Y - z*Z)*X + Y*Z*(1 - z)", "Y*((z - 1)*X + z*Y - Z)", "Z*((z - 1)*X + z*Y - Z)"]}],
  "expected": {"degree": 3, "galois": true,
               "elements": {"identity": "jonquieres", "sigma": "jonquieres", "sigma^2": "jonquieres"},
               "jonquieres": true, "cremona": true,
               "extendable_elements": ["identity", "sigma", "sigma^2"]}
})js";

const char* kCubicChar3 = R"js({
  "name": "cubic-char3",
  "field": "F_3",
  "curve": {"implicit": "X^3 - Y^2*X + Z^3", "param": ["v^3", "u^3", "u^2*v - v^3"]},
  "point": ["1", "0", "0"],
  "generators": [[["1", "0"], ["1", "1"]]],
  "singular_points": [["1", "0", "2"]],
  "known_maps": [{"element": "sigma", "components": ["X + Y", "Y", "Z"], "invariant": true}],
  "expected": {"degree": 3, "galois": true,
               "elements": {"identity": "jonquieres", "sigma": "jonquieres", "sigma^2": "jonquieres"},
               "jonquieres": true, "cremona": true,
               "extendable_elements": ["identity", "sigma", "sigma^2"]}
})js";

// i = z^2, sqrt2 = z - z^3, i*sqrt2 = z + z^3. The chain stores forward
// point maps; the first is the inverse of the substitution sending the
// coordinate points to the three double points, the last the inverse of the
// substitution sending Y^2 - XZ to the conic.
const char* kQuarticI = R"js({
  "name": "quartic-i",
  "field": "Q(zeta_8)",
  "curve": {"implicit": "X^4 - 4*Z*Y*X^2 - Z*Y^3 + 2*Z^2*Y^2 - Y*Z^3",
            "param": ["u*v^3 + u^3*v", "u^4", "v^4"]},
  "point": ["1", "0", "0"],
  "generators": [[["z^2", "0"], ["0", "1"]]],
  "singular_points": [["0", "1", "1"], ["z^3 + z", "-1", "1"], ["z^3 + z", "1", "-1"]],
  "expected": {"degree": 4, "galois": true,
               "elements": {"identity": "jonquieres", "sigma": "cremona_only", "sigma^2": "jonquieres",
                            "sigma^3": "cremona_only"},
               "jonquieres": false, "cremona": true,
               "extendable_elements": ["identity", "sigma", "sigma^2", "sigma^3"]}
})js";

const char* kQuinticZeta5 = R"js({
  "name": "quintic-zeta5",
  "field": "Q(zeta_5)",
  "curve": {"param": ["u*v^6 - u^7", "u^5*(u^2 + v^2)", "v^5*(u^2 + v^2)"]},
  "point": ["1", "0", "0"],
  "generators": [[["z", "0"], ["0", "1"]]],
  "singular_points": [["1", "0", "0"], ["1", "-1", "0"]],
  "expected": {"degree": 5, "galois": true,
               "elements": {"identity": "jonquieres", "sigma": "none_found", "sigma^2": "none_found",
                            "sigma^3": "none_found", "sigma^4": "none_found"},
               "proven": {"sigma": true, "sigma^2": true, "sigma^3": true, "sigma^4": true},
               "jonquieres": false, "cremona": false,
               "extendable_elements": ["identity"]}
})js";

ReductionChain quartic_chain(const Field& k) {
  auto e = [&](const char* t) { return parse_element(t, k); };
  FieldElement s = e("z^3 + z");
  Matrix sub = Matrix::from_rows(k, {{e("0"), -s, -s}, {e("2"), e("1"), e("-1")}, {e("2"), e("-1"), e("1")}});
  Matrix conic = Matrix::from_rows(k, {{e("4*z^2"), e("0"), e("-z^2")},
                                       {e("0"), e("2*(z - z^3)"), e("0")},
                                       {e("8"), e("-6*(z - z^3)"), e("2")}});
  ReductionChain ch;
  ch.steps.push_back(LinearStep{*sub.inverse()});
  ch.steps.push_back(QuadraticStep{{ProjPoint::coordinate(k, 0), ProjPoint::coordinate(k, 1), ProjPoint::coordinate(k, 2)}});
  ch.steps.push_back(LinearStep{*conic.inverse()});
  return ch;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"cubic-omega", "cubic-char3", "quartic-i", "quintic-zeta5"}; }

bool is_builtin(const std::string& name) {
  auto n = builtin_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Scenario builtin_scenario(const std::string& name) {
  if (name == "cubic-omega") return scenario_from_json_text(kCubicOmega, name);
  if (name == "cubic-char3") return scenario_from_json_text(kCubicChar3, name);
  if (name == "quintic-zeta5") return scenario_from_json_text(kQuinticZeta5, name);
  if (name == "quartic-i") {
    Scenario s = scenario_from_json_text(kQuarticI, name);
    s.chain = quartic_chain(s.field);
    return s;
  }
  throw ScenarioError("unknown scenario '" + name + "'");
}

Scenario scenario_from_json_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(origin + ": malformed JSON: " + e.what());
  }
  try {
    return from_json(j, origin);
  } catch (const json::exception& e) {
    throw ScenarioError(origin + ": " + e.what());
  } catch (const FieldError& e) {
    throw ScenarioError(origin + ": " + e.what());
  } catch (const PolyError& e) {
    throw ScenarioError(origin + ": " + e.what());
  }
}

Scenario load_scenario(const std::string& name_or_path) {
  if (is_builtin(name_or_path)) return builtin_scenario(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw ScenarioError("unknown scenario or unreadable file '" + name_or_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json_text(ss.str(), name_or_path);
}

PlaneRationalMap parse_map_json(const std::string& text, const Field& k) {
  try {
    return map_from_json(json::parse(text), k, "map");
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("map: ") + e.what());
  }
}

Scenario conjugate(const Scenario& s, const Matrix& m) {
  auto minv = m.inverse();
  if (!minv) throw ScenarioError("conjugating matrix is singular");
  const Field& k = s.field;
  PlaneRationalMap lin = PlaneRationalMap::linear(m), lin_inv = PlaneRationalMap::linear(*minv);
  MultiPoly G = lin_inv.pull_back(s.curve.implicit());
  Scenario out = s;
  out.curve = s.curve.param() ? PlaneCurve::from_both(G, s.curve.param()->transformed(m)) : PlaneCurve::from_implicit(G);
  auto move = [&](const ProjPoint& p) { return ProjPoint::from_vector(m * p.to_vector()); };
  if (s.point) out.point = move(*s.point);
  for (auto& p : out.singular_points) p = move(p);
  if (s.chain) {
    ReductionChain ch;
    ch.steps.push_back(LinearStep{*minv});
    for (const auto& st : s.chain->steps) ch.steps.push_back(st);
    out.chain = ch;
  }
  auto conj = [&](const PlaneRationalMap& f) { return map_compose(lin, map_compose(f, lin_inv)); };
  if (s.map) out.map = conj(*s.map);
  for (auto& km : out.known_maps) km.map = conj(km.map);
  (void)k;
  return out;
}

}  // namespace galcrem
