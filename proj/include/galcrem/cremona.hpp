// Reduction of rational curves by linear and quadratic plane transformations,
// and transport of automorphisms back along a reduction.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galcrem/curve.hpp"
#include "galcrem/galois.hpp"
#include "galcrem/maps.hpp"

namespace galcrem {

class CremonaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairingReport {
  int degree = 0;
  std::vector<unsigned> multiplicities;
  int pairing = 0;                // d - 6
  std::vector<int> coefficients;  // 2 - m_i
  bool line_equivalence_guaranteed = false;
};

PairingReport kodaira_pairing(int d, const std::vector<unsigned>& mults);

enum class LineEquivalence { equivalent_to_line, unknown };
std::string to_string(LineEquivalence e);

/// Needs a parametrization; throws CremonaError otherwise.
LineEquivalence line_equivalence_decision(const PlaneCurve& c);

/// v -> M v.
struct LinearStep {
  Matrix matrix;
};
/// L o [YZ:XZ:XY] o L^-1 where L sends the coordinate points to p1, p2, p3.
struct QuadraticStep {
  std::array<ProjPoint, 3> points;
};
using ChainStep = std::variant<LinearStep, QuadraticStep>;

/// The plane map of one step.
PlaneRationalMap step_map(const ChainStep& s, const Field& field);
/// Matrix with columns p1, p2, p3; throws CremonaError when collinear.
Matrix quadratic_frame(const std::array<ProjPoint, 3>& points);

struct StepRecord {
  std::string kind;                  // "linear" or "std_quadratic_at"
  int degree_before = 0, degree_after = 0;
  std::array<unsigned, 3> multiplicities{0, 0, 0};  // quadratic steps only
  bool degree_formula_holds = true;
};

struct QuadraticImage {
  PlaneCurve image;
  QuadraticStep step;
  StepRecord record;
};

/// Throws CremonaError for collinear points or a point not on C.
QuadraticImage quadratic_at_three_points(const PlaneCurve& c, const ProjPoint& p1, const ProjPoint& p2,
                                         const ProjPoint& p3);

/// Lift of g to the conic Y^2 = XZ through rho = [u^2 : uv : v^2],
/// normalized by 1/det(g), acting on column vectors: rho o g = lift(g) o rho.
Matrix conic_lift(const LineMobius& g);

struct ReductionChain {
  std::vector<ChainStep> steps;
};

struct ChainReplay {
  std::vector<PlaneCurve> curves;  // start, then the image after each step
  std::vector<StepRecord> records;
  const PlaneCurve& end() const { return curves.back(); }
};

ChainReplay replay(const ReductionChain& chain, const PlaneCurve& start);

/// Repeatedly applies a quadratic step at three non-collinear points of
/// largest total multiplicity while that sum exceeds the degree. Candidates
/// are `hints`, points of the current parametrization at small parameters,
/// and the images of earlier candidates.
ReductionChain greedy_reduction(const PlaneCurve& c, const std::vector<ProjPoint>& hints, unsigned max_steps = 16);

/// Composite plane map of the chain (first step applied first).
PlaneRationalMap chain_map(const ReductionChain& chain, const Field& field);
/// Inverse of chain_map, composed step by step.
PlaneRationalMap chain_inverse(const ReductionChain& chain, const Field& field);

/// chain^-1 o A o chain with the gcd cleared after every composition.
PlaneRationalMap conjugate_extension(const ReductionChain& chain, const Matrix& end_automorphism);

struct EndAutomorphism {
  Parametrization end_param;        // chain o phi
  Matrix matrix;                    // A with A (chain o phi) = (chain o phi) o g
  std::optional<Matrix> conic_lift; // via rho when the end curve is Y^2 - XZ
  bool lifts_agree = true;
};

/// Transports g to a linear automorphism of the chain's end curve.
std::optional<EndAutomorphism> end_automorphism(const ReductionChain& chain, const Parametrization& phi,
                                                const LineMobius& g);

/// Full plane extension of g through the chain, nullopt when the end curve
/// has no linear automorphism restricting to g.
std::optional<PlaneRationalMap> chain_extension(const ReductionChain& chain, const Parametrization& phi,
                                                const LineMobius& g);

}  // namespace galcrem
