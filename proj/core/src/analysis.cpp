#include "curvelab/analysis.hpp"

namespace curvelab {

AnalysisReport analyze(const PlaneCurve& c, const EngineOptions& options, bool with_stability) {
  c.require_reduced();
  AnalysisReport r;
  r.curve = c;
  const SingularLocus locus = singular_points(c, options);
  r.locus_complete = locus.completeness == Completeness::Complete;
  r.global.partial = !r.locus_complete;
  for (const auto& sp : locus.points) {
    PointRecord rec;
    rec.singular = sp;
    try {
      const SingularityClass k = classify(c, sp.point, options);
      rec.mu = k.mu;
      rec.classification = k;
      rec.lct = lct_at_point(c, sp.point, options).value;
      if (*rec.lct < r.global.value) {
        r.global.value = *rec.lct;
        r.global.witness = sp.point;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExtensionLimit && e.code() != ErrorCode::DepthExceeded) throw;
      rec.error = std::string(error_code_name(e.code()));
      r.global.partial = true;
    }
    r.points.push_back(std::move(rec));
  }
  r.partial = r.global.partial;
  if (with_stability && c.degree() >= 3) {
    r.stability = stability(c, options);
    if (r.stability->search_space.truncated) r.partial = true;
  }
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json j{{"point", to_json(p.singular.point)},
           {"multiplicity", p.singular.multiplicity},
           {"conjugates", p.singular.conjugates}};
    if (p.mu) j["mu"] = *p.mu;
    if (p.lct) j["lct"] = to_json(*p.lct);
    if (p.classification) j["class"] = to_json(*p.classification);
    if (!p.error.empty()) j["error"] = p.error;
    pts.push_back(std::move(j));
  }
  Json j{{"schema", kReportSchema},
         {"curve", to_json(r.curve)},
         {"singular_points", pts},
         {"global_lct", to_json(r.global)},
         {"locus_complete", r.locus_complete},
         {"partial", r.partial}};
  j["stability"] = r.stability ? to_json(*r.stability) : Json(nullptr);
  return j;
}

}  // namespace curvelab
