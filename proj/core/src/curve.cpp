#include "curvelab/curve.hpp"

#include <algorithm>

#include "curvelab/elimination.hpp"
#include "curvelab/error.hpp"
#include "curvelab/factor.hpp"
#include "curvelab/parse.hpp"

namespace curvelab {

const std::vector<std::string>& plane_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

const std::vector<std::string>& germ_vars() {
  static const std::vector<std::string> v{"x1", "x2"};
  return v;
}

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(std::vector<FieldElement> coords) : coords_(std::move(coords)) {
  int last = -1;
  for (int i = 0; i < dim(); ++i)
    if (!coords_[i].is_zero()) last = i;
  if (last < 0) fail(ErrorCode::InvalidArgument, "the zero vector is not a projective point");
  const FieldElement inv = coords_[last].inverse();
  for (auto& c : coords_) c = (c * inv).canonical();
}

ProjPoint ProjPoint::from_rationals(const std::vector<Rational>& coords) {
  return ProjPoint(std::vector<FieldElement>(coords.begin(), coords.end()));
}

int ProjPoint::pivot() const {
  for (int i = dim() - 1; i >= 0; --i)
    if (!coords_[i].is_zero()) return i;
  return -1;
}

FieldPtr ProjPoint::field() const {
  FieldPtr f;
  for (const auto& c : coords_)
    if (!c.is_rational()) f = common_field(f, c.field());
  return f;
}

std::string ProjPoint::str() const {
  std::string out;
  for (int i = 0; i < dim(); ++i) {
    if (i) out += ":";
    out += coords_[i].str();
  }
  return out;
}

bool canonical_less(const ProjPoint& a, const ProjPoint& b) {
  const int fa = field_degree(a.field()), fb = field_degree(b.field());
  if (fa != fb) return fa < fb;
  for (int i = 0; i < std::min(a.dim(), b.dim()); ++i) {
    if (canonical_less(a.coords_[i], b.coords_[i])) return true;
    if (canonical_less(b.coords_[i], a.coords_[i])) return false;
  }
  return a.dim() < b.dim();
}

// ---------------------------------------------------------------- PlaneCurve

PlaneCurve::PlaneCurve(const MPoly& form, bool allow_non_reduced) {
  if (form.nvars() != 3) fail(ErrorCode::DimensionMismatch, "a plane curve needs a form in three variables");
  if (form.is_zero() || form.is_constant()) fail(ErrorCode::InvalidArgument, "a plane curve needs a nonconstant form");
  if (!form.is_homogeneous()) fail(ErrorCode::InvalidArgument, "form " + form.str() + " is not homogeneous");
  form_ = form.renamed(plane_vars()).normalized();
  degree_ = form_.total_degree();
  if (form_.is_rational()) {
    reduced_ = squarefree_part(form_).is_reduced;
    if (!reduced_ && !allow_non_reduced) fail(ErrorCode::NotReduced, "curve " + form_.str() + " has a repeated component");
  }
}

PlaneCurve PlaneCurve::parse(const std::string& text, bool allow_non_reduced) {
  return PlaneCurve(parse_polynomial(text, plane_vars()), allow_non_reduced);
}

void PlaneCurve::require_reduced() const {
  if (!reduced_) fail(ErrorCode::NotReduced, "operation requires a reduced curve; " + form_.str() + " is not");
}

bool PlaneCurve::contains(const ProjPoint& p) const {
  if (p.dim() != 3) fail(ErrorCode::DimensionMismatch, "plane point needs three coordinates");
  return form_.eval(p.coords()).is_zero();
}

// ---------------------------------------------------------------- localization

CurveGerm make_germ(const MPoly& equation) {
  if (equation.nvars() != 2) fail(ErrorCode::DimensionMismatch, "a germ needs two variables");
  CurveGerm g;
  g.equation = equation.renamed(germ_vars());
  g.field = g.equation.field();
  g.origin_history = LinearChange::identity(3);
  return g;
}

CurveGerm localize(const PlaneCurve& c, const ProjPoint& p) {
  if (!c.contains(p)) fail(ErrorCode::PointNotOnCurve, "point " + p.str() + " is not on " + c.form().str());
  const int l = p.pivot();
  Matrix m(3, std::vector<FieldElement>(3));
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == l) continue;
    m[i][col++] = FieldElement(1);
  }
  for (int i = 0; i < 3; ++i) m[i][2] = p.coords()[i];
  LinearChange frame(m);
  MPoly moved = apply_linear_change(c.form(), frame).substitute(2, FieldElement(1));
  // Drop the eliminated third variable.
  MPoly germ(germ_vars());
  for (const auto& [e, v] : moved.terms()) germ.add_term({e[0], e[1]}, v);
  CurveGerm g;
  g.equation = std::move(germ);
  g.field = p.field();
  g.origin_history = std::move(frame);
  return g;
}

bool locally_reduced(const CurveGerm& g) {
  if (!g.equation.is_rational()) return true;
  MPoly h = gcd(g.equation, g.equation.derivative(0));
  h = gcd(h, g.equation.derivative(1));
  return h.is_zero() ? false : !h.eval({FieldElement(0), FieldElement(0)}).is_zero();
}

int multiplicity_at(const PlaneCurve& c, const ProjPoint& p) {
  if (!c.contains(p)) return 0;
  return localize(c, p).equation.order();
}

// ---------------------------------------------------------------- singular points

namespace {

/// Restriction of a ternary form to the chart z = 1, as a polynomial in (x, y).
MPoly chart_z(const MPoly& f) {
  static const std::vector<std::string> xy{"x", "y"};
  MPoly out(xy);
  for (const auto& [e, v] : f.terms()) out.add_term({e[0], e[1]}, v);
  return out;
}

}  // namespace

SingularLocus singular_points(const PlaneCurve& c, const EngineOptions& options) {
  c.require_reduced();
  SingularLocus locus;
  const MPoly& f = c.form();
  if (!f.is_rational()) fail(ErrorCode::InvalidArgument, "singular point search needs a curve over Q");
  const std::vector<MPoly> partials{f.derivative(0), f.derivative(1), f.derivative(2)};
  std::vector<ProjPoint> found;

  // Chart z = 1.
  SolveOptions so;
  so.max_extension_degree = options.max_extension_degree;
  std::vector<MPoly> system;
  for (const auto& d : partials) system.push_back(chart_z(d));
  SolveResult r = solve_system_sheared(system, so);
  if (r.status != SolveStatus::Complete) locus.completeness = Completeness::TruncatedByExtensionLimit;
  for (const auto& pt : r.points) found.emplace_back(std::vector<FieldElement>{pt[0], pt[1], FieldElement(1)});

  // Line z = 0, chart y = 1.
  QPoly g;
  for (const auto& d : partials) {
    MPoly s = d.substitute(2, FieldElement(0)).substitute(1, FieldElement(1));
    g = gcd(g, s.to_univariate(0).to_qpoly());
  }
  if (g.is_zero()) fail(ErrorCode::NotReduced, "curve is singular along the line z = 0");
  for (const auto& fac : factor_rational(g)) {
    if (fac.factor.degree() == 1) {
      found.emplace_back(std::vector<FieldElement>{-fac.factor.c[0], FieldElement(1), FieldElement(0)});
    } else if (fac.factor.degree() <= options.max_extension_degree) {
      FieldPtr k = NumberField::make_unchecked(fac.factor);
      found.emplace_back(std::vector<FieldElement>{FieldElement::generator(k), FieldElement(1), FieldElement(0)});
    } else {
      locus.completeness = Completeness::TruncatedByExtensionLimit;
    }
  }

  // The point [1:0:0].
  const std::vector<FieldElement> e0{FieldElement(1), FieldElement(0), FieldElement(0)};
  if (std::all_of(partials.begin(), partials.end(), [&](const MPoly& d) { return d.eval(e0).is_zero(); }))
    found.emplace_back(e0);

  std::sort(found.begin(), found.end(), [](const ProjPoint& a, const ProjPoint& b) { return canonical_less(a, b); });
  for (const auto& p : found) {
    SingularPoint sp;
    sp.point = p;
    sp.multiplicity = multiplicity_at(c, p);
    sp.conjugates = field_degree(p.field());
    locus.points.push_back(std::move(sp));
  }
  return locus;
}

}  // namespace curvelab
