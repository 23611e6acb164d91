// Scenario data: built-in worked examples and the JSON file format.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galcrem/cremona.hpp"
#include "galcrem/curve.hpp"
#include "galcrem/galois.hpp"
#include "galcrem/maps.hpp"

namespace galcrem {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KnownMap {
  std::string element;  // label of the group element it should extend
  PlaneRationalMap map;
  bool expect_invariant = false;  // F o J = F exactly
};

struct Expectations {
  std::optional<unsigned> degree;
  std::optional<GaloisVerdict> galois;
  std::map<std::string, ExtensionClass> elements;
  std::map<std::string, bool> proven;
  std::optional<bool> jonquieres, cremona;
  std::optional<std::vector<std::string>> extendable;
  bool empty() const {
    return !degree && !galois && elements.empty() && proven.empty() && !jonquieres && !cremona && !extendable;
  }
};

struct Scenario {
  std::string name;
  Field field;
  PlaneCurve curve;
  bool implicit_given = false;
  std::optional<ProjPoint> point;
  std::vector<LineMobius> generators;
  std::vector<ProjPoint> singular_points;
  std::optional<ReductionChain> chain;
  std::optional<PlaneRationalMap> map;
  std::vector<KnownMap> known_maps;
  Expectations expected;
};

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
Scenario builtin_scenario(const std::string& name);

/// A built-in name or a path to a JSON scenario/curve file.
Scenario load_scenario(const std::string& name_or_path);
Scenario scenario_from_json_text(const std::string& text, const std::string& origin = "<input>");

/// Same data moved by v -> M v: implicit F o M^-1, parametrization M o phi,
/// points M p, a linear step M^-1 prepended to the chain, maps conjugated.
/// Generators act on the parameter line and are unchanged.
Scenario conjugate(const Scenario& s, const Matrix& m);

/// "Q", "Q(zeta_n)", "F_p" (also "cyclotomic(n)", "prime(p)").
Field parse_field(const std::string& text);
std::string field_name(const Field& k);
/// "a,b,c" or "[a:b:c]".
ProjPoint parse_point(const std::string& text, const Field& k);
/// Map fragment: {"linear": [[...]]} or {"components": [...]} as JSON text.
PlaneRationalMap parse_map_json(const std::string& text, const Field& k);

}  // namespace galcrem
