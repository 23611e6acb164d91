// Projection extensions k(C)/K_P: Galois tests, deck groups, fractional-linear
// normal forms over the base, and extensions of group elements to the plane.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "galcrem/curve.hpp"
#include "galcrem/maps.hpp"
#include "galcrem/ratfunc.hpp"
#include "galcrem/sqrt.hpp"

namespace galcrem {

class GaloisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The curve seen from P after moving P to [1:0:0]. In the chart x = X/Z,
/// y = Y/Z the projection from P is (x, y) -> y and x generates the extension.
struct ProjectionModel {
  PlaneCurve curve;
  ProjPoint center;
  Matrix move;           // M with M P = [1:0:0]
  MultiPoly moved;       // F o M^-1 in X, Y, Z
  MultiPoly fiber_poly;  // moved(x, y, 1) in the variables x, y
  unsigned multiplicity = 0;
  unsigned ext_degree = 0;

  /// Largest y-degree among the x-coefficients of fiber_poly.
  int base_degree() const;
};

/// Throws GaloisError when C is a line through P.
ProjectionModel projection_model(const PlaneCurve& c, const ProjPoint& p);

/// psi = pi_P o phi as a pair of binary forms with the common factor removed.
std::array<MultiPoly, 2> projection_on_line(const Parametrization& phi, const ProjPoint& p);

/// True when psi o g is proportional to psi.
bool deck_verify(const Parametrization& phi, const ProjPoint& p, const LineMobius& g);

/// F divides F o J and F o J is nonzero.
bool preserves_curve(const MultiPoly& F, const PlaneRationalMap& J);
/// J o phi is proportional to phi o g.
bool restricts_to(const PlaneRationalMap& J, const Parametrization& phi, const LineMobius& g);
/// pi_P o J is proportional to pi_P.
bool pencil_preserved(const PlaneRationalMap& J, const ProjPoint& p);

enum class GaloisVerdict { galois, not_galois, undetermined };
std::string to_string(GaloisVerdict v);

/// Composition and equality of fractional-linear maps over k(y).
MobiusOverBase compose(const MobiusOverBase& a, const MobiusOverBase& b);  // a o b
bool is_identity(const MobiusOverBase& m);

struct GroupElement {
  std::string label;
  std::optional<LineMobius> on_line;       // action on the parameter line
  std::optional<MobiusOverBase> on_fiber;  // action on x when known
};

struct GaloisCertificate {
  unsigned degree = 0;
  GaloisVerdict verdict = GaloisVerdict::undetermined;
  std::string method;
  std::vector<LineMobius> generators;  // verified deck transformations
  std::vector<LineMobius> rejected;    // candidates failing verification
  std::vector<GroupElement> elements;  // the group, identity first
  std::optional<UPoly> discriminant;   // degree 3: disc_x of the monic fiber polynomial
  std::optional<MobiusOverBase> sigma; // a generator acting on x (degrees 2 and 3)
  std::string detail;
};

/// Closes the verified candidates under composition; galois iff the group
/// has exactly `degree` elements.
GaloisCertificate deck_group_from_candidates(const Parametrization& phi, const ProjPoint& p,
                                             const std::vector<LineMobius>& candidates, unsigned degree);

/// Degrees 1-3 without a parametrization.
GaloisCertificate galois_test_low_degree(const ProjectionModel& model, const PrecisionBudget& budget = {});

/// Discriminant in x of the monic cubic fiber_poly / lc_x, a polynomial in y.
UPoly cubic_discriminant(const MultiPoly& fiber_poly);

/// x, sigma(x) and y as rational functions of the affine parameter t = u/v.
struct SigmaOnX {
  RatFunc x, sigma_x, y;
  std::optional<LineMobius> g;
};
SigmaOnX express_sigma_on_x(const Parametrization& phi, const ProjPoint& p, const LineMobius& g);

enum class MobiusStatus { found, none_up_to_bound, none_proven };
std::string to_string(MobiusStatus s);

struct MobiusSolveResult {
  MobiusStatus status = MobiusStatus::none_up_to_bound;
  std::optional<MobiusOverBase> mobius;  // polynomial coefficients, no common factor
  unsigned degree_bound = 0;
  int degree_used = -1;
  std::string certificate;
};

/// Searches alpha..delta in k[y] of degree <= D, increasing D from 0, with
/// sigma(x) (gamma x + delta) = alpha x + beta in k(t). When nothing is found
/// and `deck` (the deck group) is given, a rank test at a sample fiber
/// proves that no solution of any degree exists.
MobiusSolveResult mobius_solver(const SigmaOnX& s, unsigned degree_bound, const std::vector<LineMobius>& deck = {},
                                std::uint64_t seed = 0x5eed, std::stop_token st = {});

/// Normal form of an order-3 automorphism x -> nu(x) of k(y)[x]/(f) for a
/// monic cubic f = x^3 + a2 x^2 + a1 x + a0. Checks f(nu) = 0 mod f and the
/// congruence (gamma x + delta) nu = alpha x + beta mod f.
MobiusOverBase lemma31_formulas(const RatPoly& f, const RatPoly& nu);

/// The map fixing the pencil through P that acts on the chart fiber
/// coordinate by `mob`.
PlaneRationalMap jonquieres_builder(const MobiusOverBase& mob, const ProjPoint& p);

struct LinearExtension {
  std::optional<Matrix> matrix;  // A with A phi = phi o g
  std::string reason;
};
LinearExtension linear_extension_solver(const Parametrization& phi, const LineMobius& g);

enum class ExtensionClass { jonquieres, cremona_only, linear, none_found, undetermined };
std::string to_string(ExtensionClass c);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct ElementExtension {
  std::string label;
  ExtensionClass verdict = ExtensionClass::undetermined;
  bool proven = false;
  MobiusStatus mobius_status = MobiusStatus::none_up_to_bound;
  std::optional<MobiusOverBase> mobius;
  std::optional<PlaneRationalMap> map;
  std::optional<Matrix> linear;
  std::string notes;
  std::vector<NamedCheck> checks;

  bool all_checks_pass() const;
};

struct ExtensionOptions {
  std::optional<unsigned> degree_bound;
  std::uint64_t seed = 0x5eed;
  std::stop_token stop;
  /// Builds a plane extension of a parameter-line automorphism (e.g. by a
  /// reduction chain); nullopt when unavailable.
  std::function<std::optional<PlaneRationalMap>(const LineMobius&)> cremona_extender;
};

struct ExtensionReport {
  std::vector<ElementExtension> elements;
  bool all_jonquieres = false;
  bool all_extend = false;
  std::vector<std::string> extendable;
  unsigned bound_m = 0;  // ceil(d / 3)
  std::optional<MultiplicityCertificate> bound_certificate;
  unsigned degree_bound = 0;
};

/// Classifies every element of the certified group.
ExtensionReport extension_verdict(const ProjectionModel& model, const GaloisCertificate& cert,
                                  const ExtensionOptions& opts = {});

/// The polynomial in u of a binary form in u, v at v = 1.
UPoly affine_part(const MultiPoly& form);

}  // namespace galcrem
