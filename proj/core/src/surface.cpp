#include "curvelab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include "curvelab/elimination.hpp"
#include "curvelab/error.hpp"
#include "curvelab/factor.hpp"
#include "curvelab/parse.hpp"

namespace curvelab {

std::string smoothness_name(Smoothness s) {
  switch (s) {
    case Smoothness::Unchecked: return "Unchecked";
    case Smoothness::Verified: return "Verified";
    case Smoothness::Assumed: return "Assumed";
    case Smoothness::Failed: return "Failed";
  }
  return "Unknown";
}

const std::vector<std::string>& space_vars() {
  static const std::vector<std::string> v{"x", "y", "z", "w"};
  return v;
}

SurfaceForm::SurfaceForm(const MPoly& f) {
  if (f.nvars() != 4) fail(ErrorCode::DimensionMismatch, "a surface needs a form in four variables");
  if (!f.is_homogeneous() || f.is_zero()) fail(ErrorCode::InvalidArgument, "surface form must be homogeneous and nonzero");
  form = f.renamed(space_vars());
  degree = form.total_degree();
  if (degree < 3) fail(ErrorCode::InvalidArgument, "surface degree must be at least 3");
}

SurfaceForm SurfaceForm::parse(const std::string& text) { return SurfaceForm(parse_polynomial(text, space_vars())); }

bool SurfaceForm::contains(const ProjPoint& p) const {
  if (p.dim() != 4) fail(ErrorCode::DimensionMismatch, "a point of P^3 needs four coordinates");
  return form.eval(p.coords()).is_zero();
}

TangentSection tangent_section(const SurfaceForm& s, const ProjPoint& o) {
  if (!s.contains(o)) fail(ErrorCode::PointNotOnCurve, "point " + o.str() + " is not on the surface");
  std::vector<FieldElement> grad;
  for (int i = 0; i < 4; ++i) grad.push_back(s.form.derivative(i).eval(o.coords()));
  int pivot = -1;
  for (int i = 0; i < 4 && pivot < 0; ++i)
    if (!grad[i].is_zero()) pivot = i;
  if (pivot < 0) fail(ErrorCode::SingularSurfacePoint, "the surface is singular at " + o.str());
  TangentSection t;
  t.basis.assign(4, std::vector<FieldElement>(3));
  std::vector<FieldElement> image;
  int col = 0;
  for (int j = 0; j < 4; ++j) {
    if (j == pivot) continue;
    t.basis[j][col] = FieldElement(1);
    t.basis[pivot][col] = (-grad[j] / grad[pivot]).canonical();
    image.push_back(o.coords()[j]);
    ++col;
  }
  std::vector<MPoly> images;
  for (int i = 0; i < 4; ++i) {
    MPoly row(plane_vars());
    for (int k = 0; k < 3; ++k)
      if (!t.basis[i][k].is_zero()) row.add_term({k == 0, k == 1, k == 2}, t.basis[i][k]);
    images.push_back(std::move(row));
  }
  const MPoly restricted = s.form.compose(images);
  if (restricted.is_zero()) fail(ErrorCode::NonReducedSection, "the surface contains its tangent plane at " + o.str());
  t.curve = PlaneCurve(restricted, true);
  t.point = ProjPoint(image);
  t.germ = localize(t.curve, t.point);
  if (!t.curve.is_reduced() && !locally_reduced(t.germ))
    fail(ErrorCode::NonReducedSection, "the tangent section has a repeated component through " + o.str());
  return t;
}

bool is_star_point(const SurfaceForm& s, const ProjPoint& o) {
  const TangentSection t = tangent_section(s, o);
  return t.germ.equation.order() == s.degree;
}

AlphaProbeReport alpha_probe(const SurfaceForm& s, const ProjPoint& o, const EngineOptions& options) {
  if (s.smoothness == Smoothness::Failed) fail(ErrorCode::SingularSurfacePoint, "the surface is not smooth");
  if (s.smoothness == Smoothness::Unchecked)
    fail(ErrorCode::InvalidArgument, "smoothness must be verified or assumed before probing");
  AlphaProbeReport r;
  r.point = o;
  r.section = tangent_section(s, o);
  const int d = s.degree;
  r.star_point = r.section.germ.equation.order() == d;
  r.lct = lct_of_germ(r.section.germ, options).value;
  const Rational cutoff(Integer(2 * d - 3), Integer(d * (d - 2)));
  if (r.lct < cutoff) {
    r.dichotomy = AlphaDichotomy::AlphaEquals;
    r.value = r.lct;
    r.threshold = threshold_class(r.section.germ, d, options);
  } else {
    r.dichotomy = AlphaDichotomy::AlphaLowerBound;
    r.value = cutoff;
  }
  return r;
}


namespace {

using u64 = std::uint64_t;

std::vector<Exponent> monomials4(int deg) {
  std::vector<Exponent> out;
  for (int a = deg; a >= 0; --a)
    for (int b = deg - a; b >= 0; --b)
      for (int c = deg - a - b; c >= 0; --c) out.push_back({a, b, c, deg - a - b - c});
  return out;
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

bool reduce_mod(const Rational& q, u64 p, u64& out) {
  const Integer pp(static_cast<unsigned long>(p));
  const Integer den = q.den() % pp;
  if (den == 0) return false;
  Integer num = q.num() % pp;
  if (num < 0) num += pp;
  out = num.get_ui() * pow_mod(den.get_ui(), p - 2, p) % p;
  return true;
}

/// Multiples m * F_i of the partials in degree D, one sparse row each.
struct MacaulayMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  double log2_hadamard = 0;
};

MacaulayMatrix macaulay(const std::vector<MPoly>& forms, int d) {
  const int D = 4 * (d - 2) + 1;
  const auto cols = monomials4(D);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  MacaulayMatrix m;
  m.cols = cols.size();
  for (const auto& f : forms) {
    double norm2 = 0;
    for (const auto& [e, v] : f.terms()) norm2 += v.rational_value().approx() * v.rational_value().approx();
    for (const auto& mono : monomials4(D - (d - 1))) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (const auto& [e, v] : f.terms()) {
        Exponent k(4);
        for (int i = 0; i < 4; ++i) k[i] = e[i] + mono[i];
        row.emplace_back(index.at(k), v.rational_value());
      }
      m.rows.push_back(std::move(row));
      m.log2_hadamard += 0.5 * std::log2(std::max(norm2, 1.0));
    }
  }
  return m;
}

/// Rank modulo p; -1 when a coefficient denominator vanishes mod p.
long rank_mod(const MacaulayMatrix& m, u64 p) {
  std::vector<std::vector<u64>> a;
  a.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    std::vector<u64> dense(m.cols, 0);
    for (const auto& [c, v] : r)
      if (!reduce_mod(v, p, dense[c])) return -1;
    a.push_back(std::move(dense));
  }
  long rank = 0;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols && next < a.size(); ++c) {
    std::size_t piv = next;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[next]);
    const u64 inv = pow_mod(a[next][c], p - 2, p);
    for (std::size_t j = c; j < m.cols; ++j) a[next][j] = a[next][j] * inv % p;
    for (std::size_t i = next + 1; i < a.size(); ++i) {
      const u64 f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[next][j]) % p;
    }
    ++next;
    ++rank;
  }
  return rank;
}

u64 next_prime(u64 n) {
  mpz_class z(static_cast<unsigned long>(n));
  mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
  return z.get_ui();
}

/// Drops the variables at the given positions (which must not occur).
MPoly restrict_to(const MPoly& p, const std::vector<int>& keep, const std::vector<std::string>& names) {
  MPoly out(names);
  for (const auto& [e, v] : p.terms()) {
    Exponent k;
    for (int i : keep) k.push_back(e[i]);
    out.add_term(k, v);
  }
  return out;
}

/// Common zero of the partials found chart by chart and checked exactly.
std::optional<ProjPoint> find_singular_point(const std::vector<MPoly>& partials) {
  auto check = [&](const std::vector<FieldElement>& pt) {
    return std::all_of(partials.begin(), partials.end(), [&](const MPoly& p) { return p.eval(pt).is_zero(); });
  };
  auto chart = [&](const std::vector<int>& keep, const std::vector<std::pair<int, int>>& fixed) -> std::optional<ProjPoint> {
    static const std::vector<std::string> names3{"x", "y", "z"}, names2{"x", "y"}, names1{"x"};
    const auto& names = keep.size() == 3 ? names3 : keep.size() == 2 ? names2 : names1;
    std::vector<MPoly> system;
    for (MPoly p : partials) {
      for (const auto& [var, value] : fixed) p = p.substitute(var, FieldElement(value));
      MPoly q = restrict_to(p, keep, names);
      if (!q.is_zero()) system.push_back(std::move(q));
    }
    const SolveResult r = solve_system_sheared(system);
    for (const auto& sol : r.points) {
      if (sol.size() != keep.size()) continue;
      std::vector<FieldElement> pt(4);
      for (std::size_t i = 0; i < keep.size(); ++i) pt[keep[i]] = sol[i];
      for (const auto& [var, value] : fixed) pt[var] = FieldElement(value);
      if (check(pt)) return ProjPoint(pt);
    }
    return std::nullopt;
  };
  if (auto p = chart({0, 1, 2}, {{3, 1}})) return p;
  if (auto p = chart({0, 1}, {{3, 0}, {2, 1}})) return p;
  if (auto p = chart({0}, {{3, 0}, {2, 0}, {1, 1}})) return p;
  const std::vector<FieldElement> e0{FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(0)};
  if (check(e0)) return ProjPoint(e0);
  return std::nullopt;
}

}  // namespace

Smoothness verify_smooth(SurfaceForm& s, bool assume, int max_degree) {
  s.witness.reset();
  if (assume) return s.smoothness = Smoothness::Assumed;
  if (s.degree > max_degree)
    fail(ErrorCode::EliminationTooLarge,
         "degree " + std::to_string(s.degree) + " exceeds the elimination bound; pass --assume-smooth");
  if (!s.form.is_rational()) fail(ErrorCode::InvalidArgument, "smoothness check needs a surface over Q");
  std::vector<MPoly> partials;
  for (int i = 0; i < 4; ++i) partials.push_back(s.form.derivative(i));
  for (const auto& p : partials)
    if (p.is_zero()) fail(ErrorCode::InvalidArgument, "surface form is a cone over a lower-dimensional form");

  std::vector<MPoly> integral;
  for (const auto& q : partials) integral.push_back(q.normalized());
  const MacaulayMatrix m = macaulay(integral, s.degree);
  const long full = static_cast<long>(m.cols);
  u64 p = (1ULL << 31);
  long r = -1;
  while (r < 0) r = rank_mod(m, p = next_prime(p));
  if (r == full) return s.smoothness = Smoothness::Verified;

  if (auto w = find_singular_point(partials)) {
    s.witness = w;
    return s.smoothness = Smoothness::Failed;
  }
  // Every maximal minor vanishes modulo primes whose product beats the Hadamard bound.
  double proved = std::log2(static_cast<double>(p));
  for (int budget = 0; budget < 96 && proved <= m.log2_hadamard + 1; ++budget) {
    p = next_prime(p);
    const long rp = rank_mod(m, p);
    if (rp < 0) continue;
    if (rp == full) return s.smoothness = Smoothness::Verified;
    proved += std::log2(static_cast<double>(p));
  }
  if (proved > m.log2_hadamard + 1) return s.smoothness = Smoothness::Failed;
  fail(ErrorCode::EliminationTooLarge, "smoothness undecided within the prime budget; pass --assume-smooth");
}

}  // namespace curvelab
