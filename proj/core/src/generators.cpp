#include "curvelab/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "curvelab/error.hpp"
#include "curvelab/parse.hpp"

namespace curvelab {

namespace {

MPoly var(int i) { return MPoly::variable(plane_vars(), i); }

MPoly one() { return MPoly::constant(plane_vars(), FieldElement(1)); }

int germ_contact(const MPoly& a, const MPoly& b) {
  const CurveGerm g = localize(PlaneCurve(a * b), ProjPoint::from_rationals({0, 0, 1}));
  const EquisingularityType t = equisingularity_type(g);
  if (t.contacts.size() != 2) return -1;
  return t.contacts[0][1];
}

std::vector<std::vector<int>> monomials(int d) {
  std::vector<std::vector<int>> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

}  // namespace

PlaneCurve cone_curve(const std::vector<std::optional<Rational>>& slopes) {
  if (slopes.size() < 2) fail(ErrorCode::InvalidArgument, "a cone needs at least two lines");
  std::set<std::optional<Rational>> seen;
  MPoly f = one();
  for (const auto& s : slopes) {
    if (!seen.insert(s).second) fail(ErrorCode::DuplicateSlope, "slope " + (s ? s->str() : "inf") + " repeated");
    f = f * (s ? var(1) - var(0) * FieldElement(*s) : var(0));
  }
  return PlaneCurve(f);
}

PlaneCurve cone_curve(int d) {
  std::vector<std::optional<Rational>> slopes;
  for (int i = 0; i + 1 < d; ++i) slopes.emplace_back(Rational(i));
  slopes.emplace_back(std::nullopt);
  return cone_curve(slopes);
}

PlaneCurve ploski_curve(int d, const std::vector<Rational>& params) {
  const bool even = d % 2 == 0;
  if ((even && d < 4) || (!even && d < 5)) fail(ErrorCode::InvalidArgument, "Ploski curves need d >= 4 even or d >= 5 odd");
  const std::size_t conics = static_cast<std::size_t>(d / 2);
  if (params.size() != conics)
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(conics) + " conic parameters");
  std::set<Rational> seen;
  for (const auto& c : params) {
    if (c.is_zero()) fail(ErrorCode::ParameterClash, "conic parameter must be nonzero");
    if (!seen.insert(c).second) fail(ErrorCode::ParameterClash, "conic parameter " + c.str() + " repeated");
  }
  const MPoly x = var(0), y = var(1), z = var(2);
  std::vector<MPoly> parts;
  for (const auto& c : params) parts.push_back(y * z - x * x - y * y * FieldElement(c));
  for (const auto& q : parts)
    if (!singular_points(PlaneCurve(q)).points.empty()) fail(ErrorCode::ParameterClash, "conic " + q.str() + " is singular");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (germ_contact(parts[i], parts[j]) != 4) fail(ErrorCode::ParameterClash, "conics do not meet with contact 4");
  MPoly f = one();
  if (!even) {
    for (const auto& q : parts)
      if (germ_contact(y, q) != 2) fail(ErrorCode::ParameterClash, "the line y = 0 is not tangent to " + q.str());
    f = y;
  }
  for (const auto& q : parts) f = f * q;
  return PlaneCurve(f);
}

PlaneCurve ploski_curve(int d) {
  std::vector<Rational> params;
  for (int i = 1; i <= d / 2; ++i) params.emplace_back(i);
  return ploski_curve(d, params);
}

PlaneCurve tk_curve(int d, ThresholdTag tag, const std::vector<Rational>& coeffs) {
  if (d < 4) fail(ErrorCode::InvalidArgument, "the T/K family needs d >= 4");
  int alpha = 0, beta = 0, gamma = 0, delta = 0;
  switch (tag) {
    case ThresholdTag::T: alpha = 1, gamma = 1; break;
    case ThresholdTag::K: alpha = 1, delta = 1; break;
    case ThresholdTag::TildeT: beta = 1, gamma = 1; break;
    case ThresholdTag::TildeK: beta = 1, delta = 1; break;
    default: fail(ErrorCode::InvalidArgument, "tag must be T, K, TildeT or TildeK");
  }
  if (!coeffs.empty() && coeffs.size() != static_cast<std::size_t>(d - 1))
    fail(ErrorCode::InvalidArgument, "expected coefficients a_2..a_d");
  const auto& v = plane_vars();
  MPoly f(v);
  f.add_term({d - 1, 0, 1}, FieldElement(alpha));
  f.add_term({d - 2, 1, 1}, FieldElement(beta));
  f.add_term({1, d - 1, 0}, FieldElement(-gamma));
  f.add_term({0, d, 0}, FieldElement(-delta));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int i = static_cast<int>(k) + 2;
    f.add_term({i, d - i, 0}, FieldElement(-coeffs[k]));
  }
  const PlaneCurve c(f, true);
  if (!c.is_reduced()) fail(ErrorCode::NonReducedResult, "coefficients give a non-reduced curve " + c.form().str());
  return c;
}

PlaneCurve wall_quintic() {
  return PlaneCurve::parse("x^5 + (y^2 - x*z)^2*(x/4 + y + z) - x^2*(y^2 - x*z)*(x + 2*y)");
}

SurfaceForm quartic_surface_a1() { return SurfaceForm::parse("w^3*x + w^2*y*z + x*y*z*(y + z)"); }

const std::vector<std::string>& named_example_names() {
  static const std::vector<std::string> names{"wall_quintic", "quartic_surface_a1"};
  return names;
}

NamedExample named_example(const std::string& name) {
  NamedExample e;
  if (name == "wall_quintic") e.curve = wall_quintic();
  else if (name == "quartic_surface_a1") e.surface = quartic_surface_a1();
  else fail(ErrorCode::UnknownName, "unknown example '" + name + "'");
  return e;
}

MPoly kuwata_germ(int n1, int n2, int k, int m1, int m2) {
  kuwata_lct(n1, n2, k, m1, m2);
  const auto& v = germ_vars();
  const MPoly x1 = MPoly::variable(v, 0), x2 = MPoly::variable(v, 1);
  MPoly f = pow(x1, n1) * pow(x2, n2);
  if (k > 0) f = f * (pow(x1, k * m1) + pow(x2, k * m2));
  return f;
}

PlaneCurve random_reduced_curve(int d, std::uint64_t seed) {
  if (d < 3) fail(ErrorCode::InvalidArgument, "random curves need d >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    MPoly f(plane_vars());
    for (const auto& e : monomials(d)) f.add_term(e, FieldElement(coef(rng)));
    if (f.total_degree() != d) continue;
    const PlaneCurve c(f, true);
    if (c.is_reduced()) return c;
  }
}

PlaneCurve random_singular_curve(int d, std::uint64_t seed) {
  if (d < 3) fail(ErrorCode::InvalidArgument, "random curves need d >= 3");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> coef(-3, 3), wt(1, 3);
  const ProjPoint o = ProjPoint::from_rationals({0, 0, 1});
  for (;;) {
    const int a = wt(rng), b = wt(rng);
    // Cut so that the point has multiplicity at least 2 and at most d - 1.
    const int lo = 2 * std::max(a, b), hi = std::min(a, b) * (d - 1) + std::max(a, b);
    const int cut = lo >= hi ? lo : std::uniform_int_distribution<int>(lo, hi)(rng);
    MPoly f(plane_vars());
    for (const auto& e : monomials(d))
      if (a * e[0] + b * e[1] >= cut && e[0] + e[1] >= 2) f.add_term(e, FieldElement(coef(rng)));
    if (f.total_degree() != d) continue;
    const PlaneCurve c(f, true);
    if (!c.is_reduced()) continue;
    const int m = multiplicity_at(c, o);
    if (m >= 2 && m < d) return c;
  }
}

SurfaceForm star_surface(int d) {
  if (d < 3) fail(ErrorCode::InvalidArgument, "surfaces need d >= 3");
  const auto& v = space_vars();
  MPoly f(v);
  f.add_term({0, 0, 1, d - 1}, FieldElement(1));
  f.add_term({d, 0, 0, 0}, FieldElement(1));
  f.add_term({0, d, 0, 0}, FieldElement(1));
  f.add_term({0, 0, d, 0}, FieldElement(1));
  return SurfaceForm(f);
}

SurfaceForm k_lift_surface(int d, std::uint64_t seed, int attempts) {
  if (d < 4) fail(ErrorCode::InvalidArgument, "the K lift needs d >= 4");
  const auto& v = space_vars();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    MPoly a(v);
    a.add_term({0, 0, 0, d - 1}, FieldElement(1));
    for (int i = d - 1; i >= 0; --i)
      for (int j = d - 1 - i; j >= 0; --j)
        for (int k = d - 1 - i - j; k >= 0; --k) {
          const int l = d - 1 - i - j - k;
          if (l == d - 1) continue;
          a.add_term({i, j, k, l}, FieldElement(coef(rng)));
        }
    MPoly f = MPoly::variable(v, 2) * a;
    f.add_term({d - 1, 0, 0, 1}, FieldElement(1));
    f.add_term({0, d, 0, 0}, FieldElement(-1));
    SurfaceForm s(f);
    try {
      if (verify_smooth(s) == Smoothness::Verified) return s;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EliminationTooLarge) throw;
    }
  }
  fail(ErrorCode::EliminationTooLarge, "no smooth K lift verified within the attempt budget");
}

Generated generate(const GeneratorSpec& spec) {
  Generated g;
  auto ints = [&](std::size_t n) {
    if (spec.params.size() != n) fail(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " integer parameters");
    std::vector<int> out;
    for (const auto& p : spec.params) {
      if (!p.is_integer()) fail(ErrorCode::InvalidArgument, "parameter " + p.str() + " must be an integer");
      out.push_back(static_cast<int>(p.num().get_si()));
    }
    return out;
  };
  switch (spec.kind) {
    case GeneratorKind::Cone: {
      if (spec.params.empty()) {
        g.curve = cone_curve(spec.degree);
      } else {
        std::vector<std::optional<Rational>> slopes(spec.params.begin(), spec.params.end());
        if (spec.degree == static_cast<int>(slopes.size()) + 1) slopes.emplace_back(std::nullopt);
        g.curve = cone_curve(slopes);
      }
      break;
    }
    case GeneratorKind::PloskiEven:
    case GeneratorKind::PloskiOdd: {
      const bool even = spec.kind == GeneratorKind::PloskiEven;
      if ((spec.degree % 2 == 0) != even) fail(ErrorCode::InvalidArgument, "degree parity does not match the kind");
      g.curve = spec.params.empty() ? ploski_curve(spec.degree) : ploski_curve(spec.degree, spec.params);
      break;
    }
    case GeneratorKind::TKFamily: g.curve = tk_curve(spec.degree, spec.tag, spec.params); break;
    case GeneratorKind::WallQuintic: g.curve = wall_quintic(); break;
    case GeneratorKind::ExampleQuarticSurface: g.surface = quartic_surface_a1(); break;
    case GeneratorKind::KuwataGerm: {
      const auto p = ints(5);
      g.germ = kuwata_germ(p[0], p[1], p[2], p[3], p[4]);
      break;
    }
    case GeneratorKind::Random:
      g.curve = spec.singular ? random_singular_curve(spec.degree, spec.seed) : random_reduced_curve(spec.degree, spec.seed);
      break;
  }
  return g;
}

}  // namespace curvelab
