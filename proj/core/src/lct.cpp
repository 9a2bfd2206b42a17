#include "curvelab/lct.hpp"

#include "curvelab/error.hpp"
#include "curvelab/parse.hpp"

namespace curvelab {

LctReport lct_from_resolution(const ResolutionTree& t) {
  if (t.status != ResolutionStatus::Resolved) fail(ErrorCode::Unresolved, "resolution incomplete: " + t.note);
  LctReport r;
  for (const auto& d : t.divisors) {
    const Rational ratio(Integer(1 + d.a), Integer(d.m));
    if (ratio < r.value) {
      r.value = ratio;
      r.witness_divisor = d.id;
    }
  }
  return r;
}

LctReport lct_of_germ(const CurveGerm& g, const EngineOptions& options) {
  if (g.equation.order() < 2) return {};
  const ResolutionTree t = resolve(g, options);
  if (t.status != ResolutionStatus::Resolved) fail(ErrorCode::ExtensionLimit, "resolution incomplete: " + t.note);
  return lct_from_resolution(t);
}

LctReport lct_at_point(const PlaneCurve& c, const ProjPoint& p, const EngineOptions& options) {
  c.require_reduced();
  LctReport r = lct_of_germ(localize(c, p), options);
  r.point = p;
  return r;
}

GlobalLct lct_global(const PlaneCurve& c, const EngineOptions& options) {
  c.require_reduced();
  const SingularLocus locus = singular_points(c, options);
  GlobalLct out;
  out.partial = locus.completeness != Completeness::Complete;
  for (const auto& sp : locus.points) {
    LctReport r;
    try {
      r = lct_at_point(c, sp.point, options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExtensionLimit) throw;
      out.partial = true;
      continue;
    }
    if (r.value < out.value) {
      out.value = r.value;
      out.witness = sp.point;
    }
  }
  return out;
}

Rational kuwata_lct(int n1, int n2, int k, int m1, int m2) {
  if (n1 < 0 || n2 < 0 || k < 0 || m1 < 1 || m2 < 1)
    fail(ErrorCode::NonReducedModel, "parameters must be non-negative with m1, m2 >= 1");
  if (n1 > 1 || n2 > 1) fail(ErrorCode::NonReducedModel, "x1^n1 x2^n2 with an exponent above 1 is not reduced");
  if (k == 0 && n1 == 0 && n2 == 0) fail(ErrorCode::NonReducedModel, "k = 0 with n1 = n2 = 0 gives a unit");
  const Rational r1(Integer(1), Integer(m1)), r2(Integer(1), Integer(m2));
  Rational value = (r1 + r2) / (Rational(k) + Rational(n1) * r1 + Rational(n2) * r2);
  if (n1 > 0) value = std::min(value, Rational(Integer(1), Integer(n1)));
  if (n2 > 0) value = std::min(value, Rational(Integer(1), Integer(n2)));
  return std::min(value, Rational(1));
}

std::string threshold_tag_name(ThresholdTag tag) {
  switch (tag) {
    case ThresholdTag::ConeAtPoint: return "ConeAtPoint";
    case ThresholdTag::T: return "T";
    case ThresholdTag::K: return "K";
    case ThresholdTag::TildeT: return "TildeT";
    case ThresholdTag::TildeK: return "TildeK";
    case ThresholdTag::PloskiQuartic: return "PloskiQuartic";
    case ThresholdTag::AboveFifthThreshold: return "AboveFifthThreshold";
  }
  return "Unknown";
}

Rational threshold_value(ThresholdTag tag, int d) {
  const Integer D(d);
  switch (tag) {
    case ThresholdTag::ConeAtPoint: return Rational(Integer(2), D);
    case ThresholdTag::T: return Rational(2 * D - 3, (D - 1) * (D - 1));
    case ThresholdTag::K: return Rational(2 * D - 1, D * (D - 1));
    case ThresholdTag::TildeT: return Rational(2 * D - 5, D * D - 3 * D + 1);
    case ThresholdTag::TildeK:
    case ThresholdTag::AboveFifthThreshold: return Rational(2 * D - 3, D * (D - 2));
    case ThresholdTag::PloskiQuartic: return Rational(5, 8);
  }
  return Rational(1);
}

MPoly normal_form_germ(ThresholdTag tag, int r) {
  const auto& v = germ_vars();
  const MPoly x1 = MPoly::variable(v, 0), x2 = MPoly::variable(v, 1);
  const unsigned ur = static_cast<unsigned>(r);
  switch (tag) {
    case ThresholdTag::T: return pow(x1, ur) - x1 * pow(x2, ur);
    case ThresholdTag::K: return pow(x1, ur) - pow(x2, ur + 1);
    case ThresholdTag::TildeT: return x2 * pow(x1, ur - 1) - x1 * pow(x2, ur);
    case ThresholdTag::TildeK: return x2 * pow(x1, ur - 1) - pow(x2, ur + 1);
    case ThresholdTag::PloskiQuartic: return pow(x2, 2) - pow(x1, 8);
    case ThresholdTag::ConeAtPoint: {
      MPoly p = MPoly::constant(v, FieldElement(1));
      for (int i = 0; i < r; ++i) p = p * (x2 - x1 * FieldElement(i));
      return p;
    }
    case ThresholdTag::AboveFifthThreshold: break;
  }
  fail(ErrorCode::InvalidArgument, "no normal form for " + threshold_tag_name(tag));
}

ThresholdClass threshold_class(const PlaneCurve& c, const ProjPoint& p, const EngineOptions& options) {
  c.require_reduced();
  return threshold_class(localize(c, p), c.degree(), options);
}

ThresholdClass threshold_class(const CurveGerm& g, int d, const EngineOptions& options) {
  const int m = g.equation.order();
  if (m < 2) fail(ErrorCode::InvalidArgument, "the germ is not singular");
  ThresholdClass out;
  out.computed_lct = lct_of_germ(g, options).value;
  out.r = d - 1;
  if (m == d) {
    out.tag = ThresholdTag::ConeAtPoint;
  } else {
    const std::string code = equisingularity_type(g, options).code;
    std::vector<ThresholdTag> candidates{ThresholdTag::T, ThresholdTag::K, ThresholdTag::TildeT};
    // For r = 2 the K~ form is a tacnode, already covered by T_2.
    if (d >= 4) candidates.push_back(ThresholdTag::TildeK);
    bool found = false;
    if (m == d - 1) {
      for (ThresholdTag tag : candidates) {
        if (equisingularity_type(make_germ(normal_form_germ(tag, d - 1)), options).code == code) {
          out.tag = tag;
          found = true;
          break;
        }
      }
    }
    if (!found && d == 4 &&
        equisingularity_type(make_germ(normal_form_germ(ThresholdTag::PloskiQuartic, 0)), options).code == code) {
      out.tag = ThresholdTag::PloskiQuartic;
      found = true;
    }
    if (!found) out.tag = ThresholdTag::AboveFifthThreshold;
  }
  out.predicted_lct = threshold_value(out.tag, d);
  out.consistent = out.tag == ThresholdTag::AboveFifthThreshold ? out.computed_lct > out.predicted_lct
                                                               : out.computed_lct == out.predicted_lct;
  return out;
}

}  // namespace curvelab
