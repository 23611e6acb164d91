#include "galcrem/fields.hpp"

#include <algorithm>
#include <sstream>

#include "galcrem/poly.hpp"

namespace galcrem {

namespace detail {

struct FieldData {
  FieldDescriptor desc;
  unsigned degree = 1;
  std::vector<long> phi;  // Phi_n, low to high, monic
};

}  // namespace detail

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Integer polynomial helpers for building Phi_n (low to high).
std::vector<long> exact_divide(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long c = num[i + den.size() - 1];  // den is monic
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

std::vector<long> cyclotomic_poly(std::uint64_t n) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide(p, cyclotomic_poly(d));
  return p;
}

const Field& default_rational() {
  static const Field q = Field::rational();
  return q;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

unsigned euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return static_cast<unsigned>(result);
}

std::string FieldDescriptor::to_string() const {
  switch (kind) {
    case FieldKind::rational:
      return "Q";
    case FieldKind::cyclotomic:
      return "Q(zeta_" + std::to_string(modulus) + ")";
    case FieldKind::prime:
      return "F_" + std::to_string(modulus);
  }
  return "?";
}

// ---------------------------------------------------------------- Field

Field Field::make(const FieldDescriptor& spec, unsigned max_cyclotomic) {
  auto data = std::make_shared<detail::FieldData>();
  data->desc = spec;
  switch (spec.kind) {
    case FieldKind::rational:
      data->desc.modulus = 0;
      break;
    case FieldKind::cyclotomic:
      if (spec.modulus < 3 || spec.modulus > max_cyclotomic)
        throw FieldError("cyclotomic order " + std::to_string(spec.modulus) + " outside [3, " +
                         std::to_string(max_cyclotomic) + "]");
      data->phi = cyclotomic_poly(spec.modulus);
      data->degree = static_cast<unsigned>(data->phi.size() - 1);
      break;
    case FieldKind::prime:
      if (!is_prime_u64(spec.modulus) || spec.modulus >= (std::uint64_t{1} << 62))
        throw FieldError("field characteristic " + std::to_string(spec.modulus) + " is not a supported prime");
      break;
  }
  return Field(std::move(data));
}

const FieldDescriptor& Field::descriptor() const { return data_->desc; }
unsigned Field::degree() const { return data_->degree; }
const std::vector<long>& Field::cyclotomic_polynomial() const { return data_->phi; }

FieldElement Field::zero() const { return FieldElement(*this); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::generator() const {
  if (kind() != FieldKind::cyclotomic) throw FieldError("generator requested in " + descriptor().to_string());
  FieldElement e(*this);
  e.num_[1] = 1;  // phi(n) >= 2 for n >= 3
  return e;
}

FieldElement Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

FieldElement Field::from_mpz(const mpz_class& v) const {
  FieldElement e(*this);
  if (kind() == FieldKind::prime) {
    e.residue_ = mpz_fdiv_ui(v.get_mpz_t(), descriptor().modulus);
  } else {
    e.num_[0] = v;
  }
  return e;
}

FieldElement Field::from_rational(const mpq_class& v) const {
  if (kind() == FieldKind::prime) {
    FieldElement d = from_mpz(v.get_den());
    if (d.is_zero()) throw FieldError("denominator vanishes in " + descriptor().to_string());
    return from_mpz(v.get_num()) / d;
  }
  FieldElement e(*this);
  e.num_[0] = v.get_num();
  e.den_ = v.get_den();
  e.normalize();
  return e;
}

FieldElement Field::from_coords(const std::vector<mpq_class>& coords) const {
  if (kind() == FieldKind::prime) {
    return coords.empty() ? zero() : from_rational(coords[0]);
  }
  FieldElement acc = zero();
  FieldElement power = one();
  FieldElement z = kind() == FieldKind::cyclotomic ? generator() : one();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (kind() == FieldKind::rational && i > 0) {
      if (coords[i] != 0) throw FieldError("non-rational coordinates for Q");
      continue;
    }
    if (coords[i] != 0) acc += from_rational(coords[i]) * power;
    power *= z;
  }
  return acc;
}

bool Field::has_at_least(std::uint64_t count) const {
  return kind() != FieldKind::prime || descriptor().modulus >= count;
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement() : FieldElement(default_rational()) {}

FieldElement::FieldElement(Field f) : field_(std::move(f)) {
  if (field_.kind() != FieldKind::prime) num_.assign(field_.degree(), mpz_class(0));
}

void FieldElement::normalize() {
  if (field_.kind() == FieldKind::prime) return;
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1 && g != 0) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  bool all_zero = std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
  if (all_zero) den_ = 1;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_.data() != o.field_.data() && !(field_ == o.field_))
    throw FieldError("field mismatch: " + field_.descriptor().to_string() + " vs " +
                     o.field_.descriptor().to_string());
}

bool FieldElement::is_zero() const {
  if (field_.kind() == FieldKind::prime) return residue_ == 0;
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (field_.kind() == FieldKind::prime) return residue_ == 1;
  if (den_ != 1 || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

std::optional<mpq_class> FieldElement::rational_value() const {
  if (field_.kind() == FieldKind::prime) return std::nullopt;
  if (!std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; })) return std::nullopt;
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

std::vector<mpq_class> FieldElement::coords() const {
  if (field_.kind() == FieldKind::prime) return {mpq_class(static_cast<unsigned long>(residue_))};
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    mpq_class q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (field_.kind() == FieldKind::prime) {
    if (r.residue_) r.residue_ = field_.descriptor().modulus - r.residue_;
  } else {
    for (auto& c : r.num_) c = -c;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  if (field_.kind() == FieldKind::prime) {
    std::uint64_t p = field_.descriptor().modulus;
    residue_ = static_cast<std::uint64_t>((static_cast<u128>(residue_) + o.residue_) % p);
    return *this;
  }
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  switch (field_.kind()) {
    case FieldKind::prime:
      residue_ = mulmod(residue_, o.residue_, field_.descriptor().modulus);
      return *this;
    case FieldKind::rational:
      num_[0] *= o.num_[0];
      den_ *= o.den_;
      normalize();
      return *this;
    case FieldKind::cyclotomic:
      break;
  }
  const std::size_t deg = num_.size();
  std::vector<mpz_class> prod(2 * deg - 1, mpz_class(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (o.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
  }
  // z^deg = -(phi_0 + phi_1 z + ... + phi_{deg-1} z^{deg-1})
  const auto& phi = field_.cyclotomic_polynomial();
  for (std::size_t k = prod.size(); k-- > deg;) {
    if (prod[k] == 0) continue;
    mpz_class c = prod[k];
    prod[k] = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      if (phi[i] != 0) prod[k - deg + i] -= c * phi[i];
    }
  }
  for (std::size_t i = 0; i < deg; ++i) num_[i] = std::move(prod[i]);
  den_ *= o.den_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  switch (field_.kind()) {
    case FieldKind::prime: {
      std::uint64_t p = field_.descriptor().modulus;
      FieldElement r = *this;
      r.residue_ = powmod(residue_, p - 2, p);
      return r;
    }
    case FieldKind::rational: {
      FieldElement r = *this;
      std::swap(r.num_[0], r.den_);
      r.normalize();
      return r;
    }
    case FieldKind::cyclotomic:
      break;
  }
  // Solve (multiplication by this) * b = 1 over Q in the power basis.
  const std::size_t deg = num_.size();
  std::vector<std::vector<mpq_class>> m(deg, std::vector<mpq_class>(deg + 1));
  FieldElement col = field_.one();
  FieldElement z = field_.generator();
  for (std::size_t j = 0; j < deg; ++j) {
    FieldElement prod = *this * col;
    auto c = prod.coords();
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = c[i];
    col *= z;
  }
  m[0][deg] = 1;
  for (std::size_t c = 0; c < deg; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (std::size_t k = c; k <= deg; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < deg; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t k = c; k <= deg; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> sol(deg);
  for (std::size_t i = 0; i < deg; ++i) sol[i] = m[i][deg];
  return field_.from_coords(sol);
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.kind() == FieldKind::prime) return a.residue_ == b.residue_;
  return a.den_ == b.den_ && a.num_ == b.num_;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  if (a.field_.kind() == FieldKind::prime) return a.residue_ < b.residue_;
  if (a.den_ != b.den_) return a.den_ < b.den_;
  return a.num_ < b.num_;
}

std::string FieldElement::to_string() const {
  if (field_.kind() == FieldKind::prime) return std::to_string(residue_);
  auto c = coords();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    mpq_class a = abs(c[k]);
    bool neg = c[k] < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

bool FieldElement::is_atomic() const {
  if (field_.kind() == FieldKind::prime) return true;
  int nonzero = 0;
  for (const auto& c : num_)
    if (c != 0) ++nonzero;
  return nonzero <= 1;
}

FieldElement parse_element(const std::string& text, const Field& field) {
  MultiPoly p = parse_poly(text, field, {});
  return p.constant_term();
}

}  // namespace galcrem
