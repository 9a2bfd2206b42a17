#include "curvelab/classify.hpp"

#include <algorithm>

#include "curvelab/elimination.hpp"
#include "curvelab/error.hpp"

namespace curvelab {

std::string singularity_tag_name(SingularityTag tag) {
  switch (tag) {
    case SingularityTag::Smooth: return "Smooth";
    case SingularityTag::A: return "A";
    case SingularityTag::Cone: return "Cone";
    case SingularityTag::T: return "T";
    case SingularityTag::K: return "K";
    case SingularityTag::TildeT: return "TildeT";
    case SingularityTag::TildeK: return "TildeK";
    case SingularityTag::PloskiEven: return "PloskiEven";
    case SingularityTag::PloskiOdd: return "PloskiOdd";
    case SingularityTag::Other: return "Other";
  }
  return "Unknown";
}

namespace {

ResolutionTree resolved(const CurveGerm& g, const EngineOptions& options) {
  ResolutionTree t = resolve(g, options);
  if (t.status != ResolutionStatus::Resolved) fail(ErrorCode::ExtensionLimit, "resolution incomplete: " + t.note);
  return t;
}

int milnor_from_tree(const ResolutionTree& t) {
  int mu = 0;
  for (const auto& p : t.points)
    if (p.blown_up()) mu += p.multiplicity * (p.multiplicity - 1) * p.conjugates;
  return mu - t.branch_count() + 1;
}

bool all_smooth(const EquisingularityType& e) {
  return std::all_of(e.multiplicity_sequences.begin(), e.multiplicity_sequences.end(),
                     [](const std::vector<int>& s) { return !s.empty() && s.front() == 1; });
}

bool ploski_even(const EquisingularityType& e, int d) {
  const int n = static_cast<int>(e.multiplicity_sequences.size());
  if (d % 2 != 0 || d < 4 || n != d / 2 || !all_smooth(e)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && e.contacts[i][j] != 4) return false;
  return true;
}

bool ploski_odd(const EquisingularityType& e, int d) {
  const int n = static_cast<int>(e.multiplicity_sequences.size());
  if (d % 2 == 0 || d < 5 || n != (d + 1) / 2 || !all_smooth(e)) return false;
  for (int line = 0; line < n; ++line) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i == j) continue;
        const int want = (i == line || j == line) ? 2 : 4;
        ok = e.contacts[i][j] == want;
      }
    if (ok) return true;
  }
  return false;
}

std::string alias_for(SingularityTag tag, int r) {
  struct Entry {
    SingularityTag tag;
    int r;
    const char* name;
  };
  static const Entry table[] = {
      {SingularityTag::K, 2, "A2"},      {SingularityTag::T, 2, "A3"},      {SingularityTag::TildeK, 3, "D5"},
      {SingularityTag::TildeT, 3, "D6"}, {SingularityTag::K, 3, "E6"},      {SingularityTag::T, 3, "E7"},
      {SingularityTag::Cone, 3, "D4"},
  };
  for (const auto& e : table)
    if (e.tag == tag && e.r == r) return e.name;
  return {};
}

}  // namespace

int milnor(const CurveGerm& g, const EngineOptions& options) {
  if (g.equation.order() <= 1) return 0;
  return milnor_from_tree(resolved(g, options));
}

int milnor(const PlaneCurve& c, const ProjPoint& p, const EngineOptions& options) {
  c.require_reduced();
  return milnor(localize(c, p), options);
}

int milnor_oracle(const CurveGerm& g) {
  const MPoly& f = g.equation;
  if (!f.is_rational()) fail(ErrorCode::InvalidArgument, "the resultant check needs a germ over Q");
  if (f.order() <= 1) return 0;
  const MPoly f1 = f.derivative(0), f2 = f.derivative(1);
  if (f1.is_zero() || f2.is_zero()) fail(ErrorCode::NonIsolatedCriticalPoint, "a partial derivative vanishes identically");
  const auto& v = f.vars();
  const MPoly X1 = MPoly::variable(v, 0), X2 = MPoly::variable(v, 1);
  for (int k = 0; k < 64; ++k) {
    const FieldElement s(k % 2 ? (k + 1) / 2 : -(k / 2));
    const std::vector<MPoly> images{X1 + X2 * s, X2};
    const MPoly g1 = f1.compose(images), g2 = f2.compose(images);
    const bool monic1 = g1.coefficients_in(1).back().is_constant();
    const bool monic2 = g2.coefficients_in(1).back().is_constant();
    if (!monic1 && !monic2) continue;
    // The only common zero on X1 = 0 must be the origin.
    const QPoly h = gcd(g1.substitute(0, FieldElement(0)).to_univariate(1).to_qpoly(),
                        g2.substitute(0, FieldElement(0)).to_univariate(1).to_qpoly());
    bool only_origin = true;
    for (int i = 0; i < h.degree(); ++i)
      if (!h.c[i].is_zero()) only_origin = false;
    if (!only_origin) continue;
    const MPoly res = resultant(g1, g2, 1);
    if (res.is_zero()) fail(ErrorCode::NonIsolatedCriticalPoint, "the partial derivatives share a component");
    return res.order();
  }
  fail(ErrorCode::NonIsolatedCriticalPoint, "no admissible shear found");
}

int milnor_oracle(const PlaneCurve& c, const ProjPoint& p) {
  if (!p.is_rational()) fail(ErrorCode::InvalidArgument, "the resultant check needs a rational point");
  return milnor_oracle(localize(c, p));
}

SingularityClass classify(const PlaneCurve& c, const ProjPoint& p, const EngineOptions& options) {
  c.require_reduced();
  return classify(localize(c, p), c.degree(), options);
}

SingularityClass classify(const CurveGerm& g, int d, const EngineOptions& options) {
  SingularityClass out;
  out.multiplicity = g.equation.order();
  if (out.multiplicity <= 1) {
    out.tag = SingularityTag::Smooth;
    out.branches = 1;
    return out;
  }
  const ResolutionTree t = resolved(g, options);
  out.type = equisingularity_type(t);
  out.mu = milnor_from_tree(t);
  out.branches = t.branch_count();
  const int m = out.multiplicity;

  auto finish = [&](SingularityTag tag, int parameter) {
    out.tag = tag;
    out.parameter = parameter;
    out.alias = alias_for(tag, parameter);
    return out;
  };

  if (m == d) return finish(SingularityTag::Cone, d);
  if (m <= d - 1) {
    std::vector<std::pair<SingularityTag, ThresholdTag>> families{{SingularityTag::T, ThresholdTag::T},
                                                                  {SingularityTag::K, ThresholdTag::K}};
    if (m >= 3) {
      families.emplace_back(SingularityTag::TildeT, ThresholdTag::TildeT);
      families.emplace_back(SingularityTag::TildeK, ThresholdTag::TildeK);
    }
    for (const auto& [tag, form] : families)
      if (equisingularity_type(make_germ(normal_form_germ(form, m)), options) == out.type) return finish(tag, m);
  }
  if (ploski_even(out.type, d)) {
    out.germ_level_reading = true;
    finish(SingularityTag::PloskiEven, 0);
    if (d == 4) out.alias = "A7";
    return out;
  }
  if (ploski_odd(out.type, d)) {
    out.germ_level_reading = true;
    return finish(SingularityTag::PloskiOdd, 0);
  }
  if (m == 2) {
    finish(SingularityTag::A, out.mu);
    out.alias = "A" + std::to_string(out.mu);
    return out;
  }
  return finish(SingularityTag::Other, 0);
}

PloskiReport ploski_extremality_check(const PlaneCurve& c, const EngineOptions& options) {
  c.require_reduced();
  PloskiReport r;
  r.degree = c.degree();
  r.bound = (r.degree - 1) * (r.degree - 1) - r.degree / 2;
  const SingularLocus locus = singular_points(c, options);
  if (locus.completeness != Completeness::Complete)
    fail(ErrorCode::ExtensionLimit, "singular locus incomplete under the extension bound");
  for (const auto& sp : locus.points) {
    if (sp.multiplicity >= r.degree) continue;
    const SingularityClass k = classify(c, sp.point, options);
    if (k.mu > r.max_mu) {
      r.max_mu = k.mu;
      r.point = sp.point;
    }
    const SingularityTag want = r.degree % 2 == 0 ? SingularityTag::PloskiEven : SingularityTag::PloskiOdd;
    if (k.tag == want) r.recognized = true;
  }
  r.equality = r.max_mu == r.bound;
  return r;
}

}  // namespace curvelab
