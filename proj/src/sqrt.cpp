#include "galcrem/sqrt.hpp"

#include <mpfr.h>

#include <numeric>
#include <vector>

namespace galcrem {

std::string to_string(SqrtStatus s) {
  switch (s) {
    case SqrtStatus::found:
      return "found";
    case SqrtStatus::none:
      return "none";
    case SqrtStatus::undetermined:
      return "undetermined";
  }
  return "?";
}

namespace {

// Owning MPFR value at a fixed precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  friend Real operator+(const Real& a, const Real& b) { Real r(a.prec()); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r(a.prec()); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r(a.prec()); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r(a.prec()); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re, im;
  explicit Complex(mpfr_prec_t p) : re(p), im(p) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex conj(const Complex& a) { return {a.re, -a.im}; }

Real from_mpq(const mpq_class& q, mpfr_prec_t p) {
  Real r(p);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Complex csqrt(const Complex& z) {
  mpfr_prec_t p = z.re.prec();
  Real mod(p);
  mpfr_hypot(mod.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  Real two = from_mpq(2, p);
  Real a = (mod + z.re) / two, b = (mod - z.re) / two;
  Complex out(p);
  mpfr_sqrt(out.re.get(), a.get(), MPFR_RNDN);
  mpfr_sqrt(out.im.get(), b.get(), MPFR_RNDN);
  if (mpfr_sgn(z.im.get()) < 0) out.im = -out.im;
  return out;
}

// Continued-fraction reconstruction with denominator bound; nullopt when no
// convergent approximates x within tol.
std::optional<mpq_class> reconstruct(const Real& x, unsigned bits) {
  mpfr_prec_t p = x.prec();
  Real tol(p);
  mpfr_set_ui_2exp(tol.get(), 1, -static_cast<long>(bits / 2), MPFR_RNDN);
  mpz_class max_den = 1;
  max_den <<= bits / 4;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real rem = x;
  for (int iter = 0; iter < 4 * static_cast<int>(bits); ++iter) {
    Real fl(p);
    mpfr_floor(fl.get(), rem.get());
    mpz_class a;
    mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) return std::nullopt;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    mpq_class cand(h1, k1);
    cand.canonicalize();
    Real diff = x - from_mpq(cand, p);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    if (mpfr_cmp(diff.get(), tol.get()) <= 0) return cand;
    Real frac = rem - fl;
    if (mpfr_zero_p(frac.get())) return std::nullopt;
    rem = from_mpq(1, p) / frac;
  }
  return std::nullopt;
}

std::optional<std::vector<std::vector<Complex>>> invert(std::vector<std::vector<Complex>> m) {
  std::size_t n = m.size();
  mpfr_prec_t p = m[0][0].re.prec();
  std::vector<std::vector<Complex>> inv(n, std::vector<Complex>(n, Complex(p)));
  for (std::size_t i = 0; i < n; ++i) mpfr_set_ui(inv[i][i].re.get(), 1, MPFR_RNDN);
  for (std::size_t c = 0; c < n; ++c) {
    // partial pivoting by modulus
    std::size_t best = c;
    Real bestv(p);
    for (std::size_t r = c; r < n; ++r) {
      Real v(p);
      mpfr_hypot(v.get(), m[r][c].re.get(), m[r][c].im.get(), MPFR_RNDN);
      if (mpfr_cmp(v.get(), bestv.get()) > 0) {
        bestv = v;
        best = r;
      }
    }
    if (mpfr_zero_p(bestv.get())) return std::nullopt;
    std::swap(m[best], m[c]);
    std::swap(inv[best], inv[c]);
    Complex piv = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] = m[c][k] / piv;
      inv[c][k] = inv[c][k] / piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      Complex f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] = m[r][k] - f * m[c][k];
        inv[r][k] = inv[r][k] - f * inv[c][k];
      }
    }
  }
  return inv;
}

std::optional<FieldElement> try_cyclotomic(const FieldElement& c, unsigned bits, unsigned max_patterns) {
  const Field& k = c.field();
  std::uint64_t n = k.descriptor().modulus;
  unsigned phi = k.degree();
  mpfr_prec_t p = static_cast<mpfr_prec_t>(bits + 64);
  std::vector<std::uint64_t> reps;  // one exponent per conjugate pair
  for (std::uint64_t j = 1; 2 * j < n; ++j)
    if (std::gcd(j, n) == 1) reps.push_back(j);
  if (reps.size() * 2 != phi) return std::nullopt;
  if (reps.size() > 1 && (reps.size() - 1 >= 31 || (1u << (reps.size() - 1)) > max_patterns)) return std::nullopt;

  Real pi(p);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  auto coords = c.coords();
  // Embedding rows: reps first, then their conjugates.
  std::vector<Complex> roots;
  for (auto j : reps) {
    Real ang = from_mpq(mpq_class(2 * static_cast<long>(j), static_cast<long>(n)), p) * pi;
    Complex w(p);
    mpfr_sin_cos(w.im.get(), w.re.get(), ang.get(), MPFR_RNDN);
    roots.push_back(w);
  }
  std::size_t h = reps.size();
  std::vector<std::vector<Complex>> vand(phi, std::vector<Complex>(phi, Complex(p)));
  for (std::size_t r = 0; r < h; ++r) {
    Complex pw(p);
    mpfr_set_ui(pw.re.get(), 1, MPFR_RNDN);
    for (unsigned j = 0; j < phi; ++j) {
      vand[r][j] = pw;
      vand[r + h][j] = conj(pw);
      pw = pw * roots[r];
    }
  }
  auto vinv = invert(vand);
  if (!vinv) return std::nullopt;
  std::vector<Complex> sq;  // sqrt of c under each representative embedding
  for (std::size_t r = 0; r < h; ++r) {
    Complex val(p);
    for (unsigned j = 0; j < phi; ++j) {
      if (coords[j] == 0) continue;
      Real cj = from_mpq(coords[j], p);
      val = val + Complex(vand[r][j].re * cj, vand[r][j].im * cj);
    }
    sq.push_back(csqrt(val));
  }
  std::uint64_t patterns = std::uint64_t{1} << (h - 1);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    std::vector<Complex> rhs(phi, Complex(p));
    for (std::size_t r = 0; r < h; ++r) {
      bool neg = r > 0 && ((mask >> (r - 1)) & 1);
      Complex v = sq[r];
      if (neg) v = Complex(-v.re, -v.im);
      rhs[r] = v;
      rhs[r + h] = conj(v);
    }
    std::vector<mpq_class> cand;
    bool ok = true;
    for (unsigned j = 0; j < phi && ok; ++j) {
      Complex acc(p);
      for (unsigned r = 0; r < phi; ++r) acc = acc + (*vinv)[j][r] * rhs[r];
      auto q = reconstruct(acc.re, bits);
      if (!q) ok = false;
      else cand.push_back(*q);
    }
    if (!ok) continue;
    FieldElement r = k.from_coords(cand);
    if (r * r == c) return r;
  }
  return std::nullopt;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

SqrtResult sqrt_prime(const FieldElement& c) {
  const Field& k = c.field();
  std::uint64_t p = k.descriptor().modulus;
  std::uint64_t a = c.residue();
  auto found = [&](std::uint64_t r) { return SqrtResult{SqrtStatus::found, k.from_mpz(mpz_class(std::to_string(r)))}; };
  if (a == 0 || p == 2) return found(a);
  if (powmod(a, (p - 1) / 2, p) != 1) return {SqrtStatus::none, std::nullopt};
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, cc = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = cc;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    cc = mulmod(b, b, p);
    t = mulmod(t, cc, p);
    r = mulmod(r, b, p);
  }
  return found(r);
}

}  // namespace

SqrtResult sqrt_in_field(const FieldElement& c, const PrecisionBudget& budget) {
  if (c.field().kind() == FieldKind::prime) return sqrt_prime(c);
  if (auto q = c.rational_value()) {
    if (*q >= 0 && mpz_perfect_square_p(q->get_num_mpz_t()) && mpz_perfect_square_p(q->get_den_mpz_t())) {
      mpz_class a, b;
      mpz_sqrt(a.get_mpz_t(), q->get_num_mpz_t());
      mpz_sqrt(b.get_mpz_t(), q->get_den_mpz_t());
      return {SqrtStatus::found, c.field().from_rational(mpq_class(a, b))};
    }
    if (c.field().kind() == FieldKind::rational) return {SqrtStatus::none, std::nullopt};
  }
  for (unsigned bits = budget.start_bits; bits <= budget.max_bits; bits *= 2) {
    if (auto r = try_cyclotomic(c, bits, budget.max_patterns)) return {SqrtStatus::found, *r};
  }
  return {SqrtStatus::undetermined, std::nullopt};
}

}  // namespace galcrem
