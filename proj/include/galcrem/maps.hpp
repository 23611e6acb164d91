// Rational self-maps of the plane, pushforwards of curves, and de Jonquieres
// decomposition.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galcrem/curve.hpp"
#include "galcrem/linalg.hpp"
#include "galcrem/mobius.hpp"
#include "galcrem/ratfunc.hpp"

namespace galcrem {

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [F1:F2:F3] with gcd 1, scaled so the leading coefficient of the first
/// nonzero component is 1.
class PlaneRationalMap {
 public:
  explicit PlaneRationalMap(std::array<MultiPoly, 3> comps);
  /// The linear map v -> M v.
  static PlaneRationalMap linear(const Matrix& m);
  static PlaneRationalMap identity(const Field& field);
  /// The standard quadratic involution [YZ:XZ:XY].
  static PlaneRationalMap standard_quadratic(const Field& field);

  const Field& field() const { return comps_[0].field(); }
  const std::array<MultiPoly, 3>& components() const { return comps_; }
  const MultiPoly& operator[](std::size_t i) const { return comps_[i]; }
  int degree() const;
  bool is_linear() const { return degree() == 1; }
  /// Matrix of a degree-1 map.
  Matrix matrix() const;

  /// F(F1, F2, F3).
  MultiPoly pull_back(const MultiPoly& F) const;
  /// The three components evaluated on a parametrization (no gcd removal).
  std::array<MultiPoly, 3> on(const std::array<MultiPoly, 3>& param) const;

  friend bool operator==(const PlaneRationalMap& a, const PlaneRationalMap& b) { return a.comps_ == b.comps_; }
  std::array<std::string, 3> to_strings() const;

 private:
  std::array<MultiPoly, 3> comps_;
};

/// g o f with the common factor removed; throws MapError when all
/// components vanish.
PlaneRationalMap map_compose(const PlaneRationalMap& g, const PlaneRationalMap& f);

/// Image of P, nullopt when P is a base point.
std::optional<ProjPoint> map_apply(const PlaneRationalMap& f, const ProjPoint& p);

/// True when all cross products f_i g_j - f_j g_i vanish.
bool proportional_eq(const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g);

/// Image of C under v -> M v: implicit F o M^-1, parametrization M o phi.
PlaneCurve linear_pushforward(const PlaneCurve& c, const Matrix& m);

struct Contraction {
  std::size_t line;       // coordinate line X_line = 0
  ProjPoint image;        // the coordinate point it is contracted to
  unsigned image_multiplicity;  // d - m_j - m_k
};

struct QuadraticPushforward {
  PlaneCurve image;
  std::array<unsigned, 3> multiplicities;  // of C at e1, e2, e3
  int expected_degree;                     // 2d - m1 - m2 - m3
  std::vector<Contraction> contractions;
};

/// Strict transform under [YZ:XZ:XY]. Throws MapError for coordinate lines.
QuadraticPushforward std_quadratic_pushforward(const PlaneCurve& c);

enum class Decision { witness, refuted, undetermined };
std::string to_string(Decision d);

struct JonquieresWitness {
  LineMobius base_action;      // alpha with pi_P o f = alpha o pi_P
  MobiusOverBase fiber_action; // in the chart x = X/Z, y = Y/Z after moving P to [1:0:0]
  Matrix move;                 // M with M P = [1:0:0]
};

struct JonquieresResult {
  Decision decision = Decision::undetermined;
  std::optional<JonquieresWitness> witness;
  std::string reason;
};

/// Decides whether f preserves the pencil of lines through P.
JonquieresResult jonquieres_decompose(const PlaneRationalMap& f, const ProjPoint& p);

/// The pencil projection from P as two linear forms [l1 : l2]
/// (= [(M v)_2 : (M v)_3] with M = move_to_e1(P)).
std::array<MultiPoly, 2> projection_forms(const ProjPoint& p);

}  // namespace galcrem
