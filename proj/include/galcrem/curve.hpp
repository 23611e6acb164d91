// Projective plane curves: implicit equations, rational parametrizations,
// multiplicities and global multiplicity certificates.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "galcrem/linalg.hpp"
#include "galcrem/mobius.hpp"
#include "galcrem/poly.hpp"

namespace galcrem {

class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a cooperative cancellation request is observed.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("cancelled") {}
};

inline void check_stop(const std::stop_token& st) {
  if (st.stop_requested()) throw Cancelled();
}

const VarList& plane_vars();  // X, Y, Z
const VarList& line_vars();   // u, v

class ProjPoint {
 public:
  /// Throws CurveError("not a projective point") for (0, 0, 0).
  ProjPoint(const FieldElement& x, const FieldElement& y, const FieldElement& z);
  static ProjPoint from_vector(const std::vector<FieldElement>& v);
  static ProjPoint coordinate(const Field& field, std::size_t i);

  const Field& field() const { return c_[0].field(); }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  std::vector<FieldElement> to_vector() const { return {c_[0], c_[1], c_[2]}; }
  /// Index of the first nonzero coordinate (which is 1).
  std::size_t pivot() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  std::array<FieldElement, 3> c_;
};

/// Three binary forms in u, v of one degree with no common factor.
class Parametrization {
 public:
  /// Removes the common factor; throws CurveError when all components
  /// vanish, degrees differ, or the image is a point.
  explicit Parametrization(std::array<MultiPoly, 3> comps);

  const Field& field() const { return comps_[0].field(); }
  const std::array<MultiPoly, 3>& components() const { return comps_; }
  const MultiPoly& operator[](std::size_t i) const { return comps_[i]; }
  int degree() const { return degree_; }

  /// Components of phi o g.
  std::array<MultiPoly, 3> precompose(const LineMobius& g) const;
  /// M o phi for a 3x3 matrix acting on column vectors.
  Parametrization transformed(const Matrix& m) const;
  /// phi([s:t]).
  ProjPoint at(const FieldElement& s, const FieldElement& t) const;

 private:
  std::array<MultiPoly, 3> comps_;
  int degree_ = 0;
};

class PlaneCurve {
 public:
  /// F must be nonzero and homogeneous in X, Y, Z.
  static PlaneCurve from_implicit(const MultiPoly& F, bool irreducible_trusted = true);
  /// The implicit equation is computed on first use.
  static PlaneCurve from_parametrization(const Parametrization& phi, bool birational_trusted = true,
                                         std::uint64_t seed = 0x5eed);
  /// Both representations; throws CurveError unless F o phi = 0.
  static PlaneCurve from_both(const MultiPoly& F, const Parametrization& phi);

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  /// Content-normalized implicit equation; computed and cached when absent.
  const MultiPoly& implicit() const;
  bool has_implicit_cached() const;
  const std::optional<Parametrization>& param() const { return param_; }
  bool irreducible_trusted() const { return irreducible_trusted_; }
  bool birational_trusted() const { return birational_trusted_; }

  bool contains(const ProjPoint& p) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<MultiPoly> value;
  };
  PlaneCurve(Field f) : field_(std::move(f)), cache_(std::make_shared<Cache>()) {}

  Field field_;
  int degree_ = 0;
  std::optional<MultiPoly> implicit_;
  std::optional<Parametrization> param_;
  bool irreducible_trusted_ = true;
  bool birational_trusted_ = true;
  std::uint64_t seed_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// Implicit equation of the image of phi by interpolating
/// Res_(u,v)(x*phi3 - phi1, y*phi3 - phi2) on a shifted triangular grid.
/// Throws CurveError when the interpolation system is singular or the
/// result fails the exact check F o phi = 0.
MultiPoly implicitize(const Parametrization& phi, std::uint64_t seed = 0x5eed);

/// Lowest total degree of F at P after moving P to a coordinate point.
unsigned multiplicity_implicit(const MultiPoly& F, const ProjPoint& p);
unsigned multiplicity_implicit(const PlaneCurve& c, const ProjPoint& p);

/// Minimum over `trials` seeded pairs of lines through P of
/// deg gcd(L1 o phi, L2 o phi).
unsigned multiplicity_param(const Parametrization& phi, const ProjPoint& p, unsigned trials = 4,
                            std::uint64_t seed = 0x5eed);

/// Linear form whose zero set is the line through p and q.
MultiPoly line_through(const ProjPoint& p, const ProjPoint& q);

/// A matrix M with M p = e_1 (first coordinate point) built from p and the
/// two coordinate vectors other than p's pivot.
Matrix move_to_e1(const ProjPoint& p);

enum class CertStatus { yes, no, undetermined };
std::string to_string(CertStatus s);

struct MultiplicityCertificate {
  CertStatus status = CertStatus::undetermined;
  unsigned m = 0;
  std::optional<ProjPoint> witness;
  unsigned witness_multiplicity = 0;
  /// Random coordinate change used for the elimination (substitution matrix).
  std::optional<Matrix> transform;
  unsigned partials = 0;
  unsigned resultants_used = 0;
  int resultant_degree = 0;
  int gcd_degree = kNegInfDegree;
  std::string detail;
};

/// Decides whether C has a point of multiplicity >= m over the ground field.
/// Requires characteristic 0 or larger than deg C (throws CurveError
/// otherwise). `hints` are checked directly as witness candidates.
MultiplicityCertificate has_point_of_multiplicity_ge(const PlaneCurve& c, unsigned m, std::uint64_t seed = 0x5eed,
                                                     const std::vector<ProjPoint>& hints = {},
                                                     std::stop_token st = {});

/// Seeded invertible 3x3 matrix with small integer entries.
Matrix random_invertible(const Field& field, std::uint64_t seed, long range = 3);

}  // namespace galcrem
