#include "curvelab/elimination.hpp"

#include <algorithm>

#include "curvelab/error.hpp"
#include "curvelab/factor.hpp"
#include "curvelab/linear_change.hpp"

namespace curvelab {
namespace {

// ---------------------------------------------------------------- determinants

Rational bareiss_det(std::vector<std::vector<Rational>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return Rational(1);
  // Clear denominators row by row.
  Rational scale(1);
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (const auto& x : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    scale *= Rational(l);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j].num() * (l / rows[i][j].den());
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return Rational(0);
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1]);
  if (sign < 0) det = -det;
  return det / scale;
}

FieldElement sylvester_det(const std::vector<FieldElement>& pc, const std::vector<FieldElement>& qc) {
  const int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
  const int size = m + n;
  if (size == 0) return FieldElement(1);
  bool rational = true;
  for (const auto& x : pc) rational = rational && x.is_rational();
  for (const auto& x : qc) rational = rational && x.is_rational();
  if (rational) {
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k <= m; ++k) s[i][i + m - k] = pc[k].rational_value();
    for (int i = 0; i < m; ++i)
      for (int k = 0; k <= n; ++k) s[n + i][i + n - k] = qc[k].rational_value();
    return FieldElement(bareiss_det(std::move(s)));
  }
  Matrix s(size, std::vector<FieldElement>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + m - k] = pc[k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + n - k] = qc[k];
  return determinant(std::move(s));
}

// ---------------------------------------------------------------- resultants

std::vector<FieldElement> formal_coeffs(const MPoly& p, int var, int formal_degree) {
  std::vector<FieldElement> c(static_cast<std::size_t>(formal_degree) + 1);
  for (const auto& [e, v] : p.terms()) c[e[var]] = v;
  return c;
}

int free_variable(const MPoly& p, const MPoly& q, int var) {
  for (int i = 0; i < p.nvars(); ++i)
    if (i != var && (p.involves(i) || q.involves(i))) return i;
  return -1;
}

MPoly interpolate_in(const std::vector<std::string>& vars, int w, const std::vector<Rational>& xs,
                     const std::vector<MPoly>& values) {
  std::map<Exponent, std::vector<FieldElement>> by_exponent;
  FieldPtr field;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (const auto& [e, c] : values[i].terms()) {
      auto& slot = by_exponent[e];
      slot.resize(values.size());
      slot[i] = c;
      if (!c.is_rational()) field = common_field(field, c.field());
    }
  }
  const int fd = field_degree(field);
  MPoly out(vars);
  for (auto& [e, vals] : by_exponent) {
    vals.resize(values.size());
    std::vector<QPoly> coord_polys;
    for (int c = 0; c < fd; ++c) {
      std::vector<Rational> ys(values.size());
      for (std::size_t i = 0; i < vals.size(); ++i) {
        const auto& co = vals[i].coords();
        ys[i] = c < static_cast<int>(co.size()) ? co[c] : Rational();
      }
      coord_polys.push_back(interpolate(xs, ys));
    }
    int maxdeg = -1;
    for (const auto& cp : coord_polys) maxdeg = std::max(maxdeg, cp.degree());
    for (int k = 0; k <= maxdeg; ++k) {
      std::vector<Rational> coords(fd);
      for (int c = 0; c < fd; ++c) coords[c] = coord_polys[c].coeff(k);
      Exponent f = e;
      f[w] = k;
      out.add_term(f, field ? FieldElement(field, coords) : FieldElement(coords[0]));
    }
  }
  return out;
}

MPoly formal_resultant(const MPoly& p, const MPoly& q, int var, int m, int n) {
  const int w = free_variable(p, q, var);
  if (w < 0) {
    return MPoly::constant(p.vars(), sylvester_det(formal_coeffs(p, var, m), formal_coeffs(q, var, n)));
  }
  const int a = p.total_degree(), b = q.total_degree();
  const int by_var = m * q.degree_in(w) + n * p.degree_in(w);
  const int by_total = n * (a - m) + m * (b - n) + m * n;
  const int bound = std::max(0, std::min(by_var, by_total));
  std::vector<Rational> xs;
  std::vector<MPoly> values;
  for (int i = 0; i <= bound; ++i) {
    const Rational x0((i % 2 == 0) ? i / 2 : -(i + 1) / 2);
    xs.push_back(x0);
    values.push_back(formal_resultant(p.substitute(w, x0), q.substitute(w, x0), var, m, n));
  }
  return interpolate_in(p.vars(), w, xs, values);
}

// ---------------------------------------------------------------- gcd

int highest_variable(const MPoly& a, const MPoly& b) {
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a.involves(i) || b.involves(i)) return i;
  return -1;
}

MPoly one_like(const MPoly& p) { return MPoly::constant(p.vars(), FieldElement(1)); }

MPoly content_in(const MPoly& p, int var) {
  MPoly c(p.vars());
  for (const auto& coef : p.coefficients_in(var)) {
    if (coef.is_zero()) continue;
    c = gcd(c, coef);
    if (c.is_constant()) return one_like(p);
  }
  return c;
}

MPoly primitive_in(const MPoly& p, int var) {
  MPoly c = content_in(p, var);
  return c.is_constant() ? p : exact_divide(p, c);
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, int var) {
  const int db = b.degree_in(var);
  const MPoly lb = b.coefficients_in(var)[db];
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    const MPoly lr = r.coefficients_in(var)[dr];
    Exponent e(a.nvars(), 0);
    e[var] = dr - db;
    r = r * lb - lr * MPoly::monomial(a.vars(), e, FieldElement(1)) * b;
  }
  return r;
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, int var) {
  if (p.nvars() != q.nvars()) fail(ErrorCode::DimensionMismatch, "resultant of polynomials in different rings");
  if (p.is_zero() || q.is_zero()) return MPoly(p.vars());
  return formal_resultant(p, q, var, p.degree_in(var), q.degree_in(var));
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  const int v = highest_variable(a, b);
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);
  const MPoly ca = content_in(a, v), cb = content_in(b, v);
  const MPoly c = gcd(ca, cb);
  MPoly pa = ca.is_constant() ? a : exact_divide(a, ca);
  MPoly pb = cb.is_constant() ? b : exact_divide(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  MPoly g;
  for (;;) {
    MPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (!r.involves(v)) {
      g = one_like(a);
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, v).normalized();
  }
  return (c * primitive_in(g, v)).normalized();
}

SquarefreeResult squarefree_part(const MPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "square-free part of the zero polynomial");
  MPoly g = p;
  for (int i = 0; i < p.nvars() && !g.is_constant(); ++i)
    if (p.involves(i)) g = gcd(g, p.derivative(i));
  if (g.is_constant()) return {p.normalized(), true};
  return {exact_divide(p, g).normalized(), false};
}

// ---------------------------------------------------------------- solver

namespace {

SolveStatus worse(SolveStatus a, SolveStatus b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

struct Solver {
  const SolveOptions& opt;

  std::vector<FieldElement> point_with(const std::vector<FieldElement>& pt, const FieldElement& v) const {
    std::vector<FieldElement> out;
    for (const auto& c : pt) out.push_back(c.canonical());
    out.push_back(v.canonical());
    return out;
  }

  /// Adds the roots of g over `field` to `out` as extensions of `base`.
  void lift_roots(const UPoly& g, const FieldPtr& field, const std::vector<FieldElement>& base, SolveResult& out) const {
    for (const auto& f : factor_univariate(g, field)) {
      const UPoly& h = f.factor;
      if (h.degree() == 1) {
        out.points.push_back(point_with(base, -h.coeff(0) / h.coeff(1)));
      } else if (field) {
        out.status = worse(out.status, SolveStatus::NeedsTower);
      } else if (h.degree() > opt.max_extension_degree) {
        out.status = worse(out.status, SolveStatus::Truncated);
      } else {
        FieldPtr k = NumberField::make_unchecked(h.to_qpoly());
        out.points.push_back(point_with(base, FieldElement::generator(k)));
      }
    }
  }

  static FieldPtr point_field(const std::vector<FieldElement>& pt) {
    FieldPtr f;
    for (const auto& c : pt)
      if (!c.is_rational()) f = common_field(f, c.field());
    return f;
  }

  SolveResult solve(std::vector<MPoly> polys, int k, bool genuine, std::size_t pair_budget) const {
    SolveResult out;
    std::vector<MPoly> live;
    for (auto& p : polys) {
      if (p.is_zero()) continue;
      if (p.is_constant()) return out;  // nonzero constant: no zeros
      live.push_back(std::move(p));
    }
    if (live.empty()) {
      if (!genuine) return {SolveStatus::Inconclusive, {}};
      return {SolveStatus::Positive, {std::vector<FieldElement>(static_cast<std::size_t>(k))}};
    }
    const int v = k - 1;
    if (k == 1) {
      QPoly g;
      for (const auto& p : live) g = gcd(g, p.to_univariate(0).to_qpoly());
      lift_roots(UPoly(g), nullptr, {}, out);
      return out;
    }
    std::vector<MPoly> p0, p1;
    for (auto& p : live) (p.involves(v) ? p1 : p0).push_back(p);

    std::vector<MPoly> projected = p0;
    std::size_t used = 0, total_pairs = p1.size() * (p1.size() - (p1.empty() ? 0 : 1)) / 2;
    for (std::size_t j = 1; j < p1.size(); ++j) {
      for (std::size_t i = 0; i < j && used < pair_budget; ++i, ++used) {
        MPoly r = resultant(p1[i], p1[j], v);
        if (!r.is_zero()) projected.push_back(std::move(r));
      }
    }
    if (projected.empty()) {
      if (genuine && p0.empty() && !p1.empty()) return {SolveStatus::Positive, {}};
      return {SolveStatus::Inconclusive, {}};
    }
    SolveResult base = solve(projected, k - 1, false, pair_budget);
    if ((base.status == SolveStatus::Inconclusive || base.status == SolveStatus::Positive) && used < total_pairs) {
      return solve(live, k, genuine, total_pairs);
    }
    if (base.status == SolveStatus::Positive) base.status = SolveStatus::Inconclusive;
    out.status = base.status;
    if (base.status == SolveStatus::Inconclusive || base.status == SolveStatus::NeedsTower) return out;

    for (const auto& pt : base.points) {
      const FieldPtr f = point_field(pt);
      UPoly g;
      bool p0_ok = true;
      for (const auto& p : p0) {
        MPoly s = p;
        for (int i = 0; i < v; ++i) s = s.substitute(i, pt[i]);
        if (!s.is_zero()) p0_ok = false;
      }
      if (!p0_ok) continue;
      for (const auto& p : p1) {
        MPoly s = p;
        for (int i = 0; i < v; ++i) s = s.substitute(i, pt[i]);
        g = gcd(g, s.to_univariate(v));
      }
      if (g.is_zero()) {
        if (genuine) {
          out.status = worse(out.status, SolveStatus::Positive);
          out.points.push_back(point_with(pt, FieldElement(0)));
        } else {
          out.status = worse(out.status, SolveStatus::Inconclusive);
        }
        continue;
      }
      if (g.degree() == 0) continue;
      lift_roots(g, f, pt, out);
    }
    return out;
  }
};

int common_nvars(const std::vector<MPoly>& polys) {
  int n = -1;
  for (const auto& p : polys) {
    if (n >= 0 && p.nvars() != n) fail(ErrorCode::DimensionMismatch, "system mixes polynomial rings");
    n = p.nvars();
  }
  return n;
}

}  // namespace

SolveResult solve_system(const std::vector<MPoly>& polys, const SolveOptions& options) {
  const int n = common_nvars(polys);
  if (n <= 0) {
    for (const auto& p : polys)
      if (!p.is_zero()) return {};
    return {SolveStatus::Positive, {{}}};
  }
  for (const auto& p : polys)
    if (!p.is_rational()) fail(ErrorCode::InvalidArgument, "solve_system expects rational coefficients");
  Solver s{options};
  return s.solve(polys, n, true, static_cast<std::size_t>(std::max(1, options.resultant_pairs)));
}

SolveResult solve_system_sheared(const std::vector<MPoly>& polys, const SolveOptions& options) {
  const int n = common_nvars(polys);
  if (n <= 1) return solve_system(polys, options);
  SolveResult first;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const long s = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
    // x_j -> x_j + s^(j+1) * x_last for j < last.
    std::vector<Rational> shift(n - 1);
    Rational pw(1);
    for (int j = 0; j < n - 1; ++j) {
      pw *= Rational(s);
      shift[j] = pw;
    }
    std::vector<MPoly> sheared;
    const auto& vars = polys.front().vars();
    std::vector<MPoly> images;
    for (int j = 0; j < n; ++j) {
      MPoly img = MPoly::variable(vars, j);
      if (j < n - 1) img += MPoly::variable(vars, n - 1) * FieldElement(shift[j]);
      images.push_back(std::move(img));
    }
    for (const auto& p : polys) sheared.push_back(s == 0 ? p : p.compose(images));
    SolveResult r = solve_system(sheared, options);
    for (auto& pt : r.points) {
      for (int j = 0; j < n - 1; ++j) pt[j] = (pt[j] + pt[n - 1] * FieldElement(shift[j])).canonical();
    }
    if (attempt == 0) first = r;
    if (r.status == SolveStatus::Complete || r.status == SolveStatus::Truncated ||
        r.status == SolveStatus::Positive)
      return r;
  }
  return first;
}

}  // namespace curvelab
