// Exact coefficient fields: Q, cyclotomic fields Q(zeta_n) and prime fields F_p.
//
// Elements carry a handle to their field. Cyclotomic elements are stored in
// the power basis 1, z, ..., z^(phi(n)-1) fully reduced modulo the n-th
// cyclotomic polynomial, as integer numerators over one positive common
// denominator, so equality is plain component-wise equality.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galcrem {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { rational, cyclotomic, prime };

inline constexpr unsigned kMaxCyclotomicOrder = 64;

struct FieldDescriptor {
  FieldKind kind = FieldKind::rational;
  std::uint64_t modulus = 0;  // n for cyclotomic, p for prime, 0 for Q

  static FieldDescriptor rational() { return {}; }
  static FieldDescriptor cyclotomic(std::uint64_t n) { return {FieldKind::cyclotomic, n}; }
  static FieldDescriptor prime(std::uint64_t p) { return {FieldKind::prime, p}; }

  std::uint64_t characteristic() const { return kind == FieldKind::prime ? modulus : 0; }
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

bool is_prime_u64(std::uint64_t n);
unsigned euler_phi(std::uint64_t n);

class FieldElement;

namespace detail {
struct FieldData;
}

/// Cheap shareable handle to an immutable field context.
class Field {
 public:
  /// Validates the descriptor: p must be prime, 3 <= n <= max_cyclotomic.
  static Field make(const FieldDescriptor& spec, unsigned max_cyclotomic = kMaxCyclotomicOrder);
  static Field rational() { return make(FieldDescriptor::rational()); }

  const FieldDescriptor& descriptor() const;
  FieldKind kind() const { return descriptor().kind; }
  std::uint64_t characteristic() const { return descriptor().characteristic(); }
  /// Number of basis coordinates: phi(n) for Q(zeta_n), 1 otherwise.
  unsigned degree() const;
  /// Integer coefficients of Phi_n, low to high (cyclotomic only).
  const std::vector<long>& cyclotomic_polynomial() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The primitive root of unity zeta (cyclotomic fields only).
  FieldElement generator() const;
  FieldElement from_int(long v) const;
  FieldElement from_mpz(const mpz_class& v) const;
  FieldElement from_rational(const mpq_class& v) const;
  /// Element from power-basis coordinates; reduces modulo Phi_n when given
  /// more than phi(n) of them.
  FieldElement from_coords(const std::vector<mpq_class>& coords) const;

  /// True when the field has at least `count` distinct elements.
  bool has_at_least(std::uint64_t count) const;

  friend bool operator==(const Field& a, const Field& b) { return a.descriptor() == b.descriptor(); }

  const detail::FieldData* data() const { return data_.get(); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
  friend class FieldElement;
};

class FieldElement {
 public:
  /// Rational zero. Prefer Field::zero() so the element carries its field.
  FieldElement();

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;
  /// The value as a rational when it lies in the prime field Q.
  std::optional<mpq_class> rational_value() const;
  /// Residue in [0, p) for prime fields.
  std::uint64_t residue() const { return residue_; }
  /// Power-basis coordinates (Q and cyclotomic fields).
  std::vector<mpq_class> coords() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Text form readable by parse_element: "3/2", "z^2 - z + 1", "5".
  std::string to_string() const;
  /// True when to_string() is a single signed monomial (needs no parentheses
  /// inside a product).
  bool is_atomic() const;

  /// Total order on the canonical representation (not a field order); used
  /// to make containers deterministic.
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);

 private:
  explicit FieldElement(Field f);
  void normalize();
  void check_same_field(const FieldElement& o) const;

  Field field_;
  std::vector<mpz_class> num_;  // Q and cyclotomic: numerators
  mpz_class den_ = 1;           // common positive denominator
  std::uint64_t residue_ = 0;   // F_p

  friend class Field;
};

/// Parses a field element in the polynomial grammar restricted to the
/// generator `z`.
FieldElement parse_element(const std::string& text, const Field& field);

}  // namespace galcrem
