// Multivariate gcd and Sylvester resultants.
#include <algorithm>

#include "galcrem/linalg.hpp"
#include "galcrem/poly.hpp"
#include "galcrem/univariate.hpp"

namespace galcrem {

namespace {

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.field(), p.vars(), p.field().one()); }

std::vector<std::size_t> used_vars(const MultiPoly& f, const MultiPoly& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (f.depends_on(i) || g.depends_on(i)) out.push_back(i);
  return out;
}

std::uint32_t order_in(const MultiPoly& p, std::size_t var) {
  std::uint32_t m = UINT32_MAX;
  for (const auto& [e, c] : p.terms()) m = std::min(m, e[var]);
  return p.is_zero() ? 0 : m;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly c(p.field(), p.vars());
  for (const auto& coef : p.coefficients_in(var)) {
    if (coef.is_zero()) continue;
    c = poly_gcd(c, coef);
    if (c.is_constant()) break;
  }
  return c;
}

// Pseudo-remainder of a by b with respect to var.
MultiPoly prem(MultiPoly a, const MultiPoly& b, std::size_t var) {
  int db = b.degree_in(var);
  MultiPoly lb = b.coefficients_in(var).back();
  MultiPoly xv = MultiPoly::variable(a.field(), a.vars(), a.vars()[var]);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int k = a.degree_in(var) - db;
    MultiPoly la = a.coefficients_in(var).back();
    a = lb * a - la * xv.pow(static_cast<unsigned>(k)) * b;
  }
  return a;
}

MultiPoly gcd_recursive(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  MultiPoly cf = content_in(f, var), cg = content_in(g, var);
  MultiPoly c = poly_gcd(cf, cg);
  MultiPoly a = f.divide_exact(cf), b = g.divide_exact(cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  MultiPoly pp = one_like(f);
  while (true) {
    if (b.degree_in(var) == 0) break;  // primitive of degree 0 is a unit
    MultiPoly r = prem(a, b, var);
    if (r.is_zero()) {
      pp = b;
      break;
    }
    a = std::move(b);
    b = r.divide_exact(content_in(r, var));
  }
  return (c * pp).monic();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return one_like(f);
  auto used = used_vars(f, g);
  if (used.size() == 1) {
    std::size_t v = used[0];
    return gcd(UPoly::from_multi(f, v), UPoly::from_multi(g, v)).to_multi(f.vars(), v);
  }
  if (f.is_homogeneous() && g.is_homogeneous()) {
    // Strip the last used variable: forms not divisible by it are
    // determined by their dehomogenization.
    std::size_t w = used.back();
    const std::string& name = f.vars()[w];
    std::uint32_t ord = std::min(order_in(f, w), order_in(g, w));
    MultiPoly fa = dehomogenize(f, name), ga = dehomogenize(g, name);
    MultiPoly h = poly_gcd(fa, ga);
    MultiPoly hh = homogenize(h, name, h.degree());
    // Restore the original variable order.
    hh = hh.embed(f.vars());
    MultiPoly wv = MultiPoly::variable(f.field(), f.vars(), name);
    return (hh * wv.pow(ord)).monic();
  }
  return gcd_recursive(f, g, used.front());
}

MultiPoly gcd_forms(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() > 2) throw PolyError("gcd_forms expects at most two variables");
  return poly_gcd(f, g);
}

namespace {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

MultiPoly det_bareiss(PolyMatrix m) {
  std::size_t n = m.size();
  const MultiPoly& sample = m[0][0];
  MultiPoly prev = MultiPoly::constant(sample.field(), sample.vars(), sample.field().one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return MultiPoly(sample.field(), sample.vars());
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly det_poly(const PolyMatrix& m, const Field& field, const VarList& vars) {
  std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(field, vars, field.one());
  std::size_t nv = vars.size();
  std::size_t var = nv;
  for (std::size_t v = 0; v < nv && var == nv; ++v)
    for (const auto& row : m)
      if (std::any_of(row.begin(), row.end(), [v](const MultiPoly& p) { return p.depends_on(v); })) {
        var = v;
        break;
      }
  if (var == nv) {
    Matrix c(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = m[i][j].constant_term();
    return MultiPoly::constant(field, vars, c.determinant());
  }
  std::size_t bound = 0;
  for (const auto& row : m) {
    int d = 0;
    for (const auto& p : row)
      if (!p.is_zero()) d = std::max(d, p.degree_in(var));
    bound += static_cast<std::size_t>(d);
  }
  if (!field.has_at_least(bound + 1)) return det_bareiss(m);
  std::vector<FieldElement> xs;
  std::vector<MultiPoly> ys;
  for (std::size_t k = 0; k <= bound; ++k) {
    FieldElement x = field.from_int(static_cast<long>(k));
    PolyMatrix e = m;
    for (auto& row : e)
      for (auto& p : row) p = p.evaluate(var, x);
    xs.push_back(x);
    ys.push_back(det_poly(e, field, vars));
  }
  // Newton interpolation with polynomial values.
  std::vector<MultiPoly> dd = ys;
  for (std::size_t j = 1; j < dd.size(); ++j)
    for (std::size_t i = dd.size() - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) * (xs[i] - xs[i - j]).inverse();
      if (i == j) break;
    }
  MultiPoly xv = MultiPoly::variable(field, vars, vars[var]);
  MultiPoly acc(field, vars);
  for (std::size_t i = dd.size(); i-- > 0;) {
    acc = acc * (xv - MultiPoly::constant(field, vars, xs[i])) + dd[i];
  }
  return acc;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  if (!(f.field() == g.field()) || f.vars() != g.vars()) throw PolyError("resultant of incompatible polynomials");
  std::size_t v = f.var_index(var);
  if (f.is_zero() || g.is_zero() || f.degree_in(v) <= 0 || g.degree_in(v) <= 0)
    throw PolyError("resultant needs positive degree in '" + var + "'");
  auto fc = f.coefficients_in(v), gc = g.coefficients_in(v);
  std::size_t m = fc.size() - 1, n = gc.size() - 1;
  MultiPoly zero(f.field(), f.vars());
  PolyMatrix s(m + n, std::vector<MultiPoly>(m + n, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = fc[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = gc[n - k];
  return det_poly(s, f.field(), f.vars());
}

}  // namespace galcrem
