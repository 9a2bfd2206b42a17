#include "curvelab/json_io.hpp"

#include <regex>

namespace curvelab {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const FieldElement& x) { return x.str(); }

Json to_json(const FieldPtr& field) {
  if (!field) return nullptr;
  return Json{{"generator", "a"}, {"min_poly", field->describe()}, {"degree", field->degree()}};
}

Json to_json(const MPoly& p) { return p.str(); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ProjPoint& p) { return Json{{"coords", p.str()}, {"field", to_json(p.field())}}; }

Json to_json(const PlaneCurve& c) {
  return Json{{"form", to_json(c.form())}, {"degree", c.degree()}, {"reduced", c.is_reduced()}};
}

Json to_json(const SurfaceForm& s) {
  Json j{{"form", to_json(s.form)}, {"degree", s.degree}, {"smoothness", smoothness_name(s.smoothness)}};
  if (s.witness) j["singular_point"] = to_json(*s.witness);
  return j;
}

Json to_json(const SingularLocus& locus) {
  Json pts = Json::array();
  for (const auto& sp : locus.points)
    pts.push_back({{"point", to_json(sp.point)}, {"multiplicity", sp.multiplicity}, {"conjugates", sp.conjugates}});
  return Json{{"points", pts},
              {"complete", locus.completeness == Completeness::Complete}};
}

Json to_json(const ResolutionTree& t) {
  Json divs = Json::array();
  for (const auto& d : t.divisors)
    divs.push_back({{"id", d.id}, {"parents", d.parents}, {"a", d.a}, {"m", d.m}, {"center", d.center},
                    {"center_multiplicity", d.center_mult}, {"conjugates", d.conjugates}});
  Json pts = Json::array();
  for (const auto& p : t.points) {
    Json j{{"id", p.id}, {"parent", p.parent}, {"depth", p.depth}, {"multiplicity", p.multiplicity},
           {"conjugates", p.conjugates}, {"divisor", p.divisor}, {"children", p.children},
           {"axis_divisors", {p.axis_divisor[0], p.axis_divisor[1]}}, {"field", to_json(p.field)}};
    if (!p.direction.empty()) j["direction"] = p.direction;
    else j["equation"] = to_json(p.equation);
    pts.push_back(std::move(j));
  }
  Json branches = Json::array();
  for (const auto& b : t.branches)
    branches.push_back({{"leaf", b.leaf}, {"centers", b.centers}, {"multiplicities", b.multiplicities}, {"copies", b.copies}});
  Json j{{"divisors", divs}, {"points", pts}, {"branches", branches},
         {"status", t.status == ResolutionStatus::Resolved ? "Resolved" : "ExtensionLimit"}};
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

Json to_json(const EquisingularityType& e) {
  return Json{{"code", e.code}, {"multiplicity_sequences", e.multiplicity_sequences}, {"contacts", e.contacts}};
}

Json to_json(const LctReport& r) {
  Json j{{"lct", to_json(r.value)}, {"point", to_json(r.point)}};
  j["witness_divisor"] = r.witness_divisor ? Json(*r.witness_divisor) : Json(nullptr);
  return j;
}

Json to_json(const GlobalLct& g) {
  return Json{{"lct", to_json(g.value)}, {"witness", g.witness ? to_json(*g.witness) : Json(nullptr)}, {"partial", g.partial}};
}

Json to_json(const ThresholdClass& t) {
  Json j{{"tag", threshold_tag_name(t.tag)}, {"r", t.r}, {"computed_lct", to_json(t.computed_lct)},
         {"consistent", t.consistent}};
  if (t.tag == ThresholdTag::AboveFifthThreshold) j["strict_lower_bound"] = to_json(t.predicted_lct);
  else j["predicted_lct"] = to_json(t.predicted_lct);
  return j;
}

Json to_json(const SingularityClass& k) {
  Json j{{"tag", singularity_tag_name(k.tag)}, {"multiplicity", k.multiplicity}, {"mu", k.mu}, {"branches", k.branches}};
  if (k.tag == SingularityTag::A) j["n"] = k.parameter;
  else if (k.parameter > 0) j["r"] = k.parameter;
  if (!k.alias.empty()) j["alias"] = k.alias;
  if (k.tag != SingularityTag::Smooth) j["equisingularity"] = to_json(k.type);
  if (k.germ_level_reading) j["germ_level_reading"] = true;
  return j;
}

Json to_json(const PloskiReport& r) {
  return Json{{"degree", r.degree},
              {"max_mu", r.max_mu},
              {"bound", r.bound},
              {"equality", r.equality},
              {"recognized", r.recognized},
              {"point", r.point ? to_json(*r.point) : Json(nullptr)}};
}

Json to_json(const WeightVector& w) { return Json{w.a, w.b}; }

Json to_json(const Flag& f) {
  Json line = Json::array();
  for (const auto& c : f.line) line.push_back(to_json(c));
  return Json{{"point", to_json(f.point)}, {"line", line}, {"frame", to_json(f.frame.matrix())},
              {"refinement", f.refinement}, {"conjugates", f.conjugates}};
}

Json to_json(const StabilityVerdict& v) {
  Json j{{"status", stability_status_name(v.status)}};
  j["max_excess"] = v.max_excess ? to_json(*v.max_excess) : Json(nullptr);
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"flag", to_json(w.flag)},  {"weights", to_json(w.w)},           {"wt", w.weight},
                    {"threshold", to_json(w.threshold)}, {"excess", to_json(w.excess)}, {"verified", w.verified}};
  }
  const auto& s = v.search_space;
  j["search_space"] = {{"flags", s.flags},
                       {"weights_evaluated", s.weights_evaluated},
                       {"refinements_tried", s.refinements_tried},
                       {"refinements_accepted", s.refinements_accepted},
                       {"truncated", s.truncated},
                       {"seeds_agree", s.seeds_agree}};
  return j;
}

Json to_json(const AlphaProbeReport& r) {
  Json j{{"point", to_json(r.point)},
         {"tangent_section", to_json(r.section.curve)},
         {"section_basis", to_json(r.section.basis)},
         {"section_point", to_json(r.section.point)},
         {"lct", to_json(r.lct)},
         {"star_point", r.star_point}};
  if (r.dichotomy == AlphaDichotomy::AlphaEquals) j["alpha"] = {{"kind", "AlphaEquals"}, {"value", to_json(r.value)}};
  else j["alpha"] = {{"kind", "AlphaLowerBound"}, {"bound", to_json(r.value)}};
  if (r.threshold) j["threshold_class"] = to_json(*r.threshold);
  return j;
}

Json error_json(const Error& e) {
  Json j{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    j["position"] = s->position();
    j["expected"] = s->expected();
  }
  return j;
}

void add_approximations(Json& j) {
  static const std::regex rational(R"(^-?\d+(/\d+)?$)");
  if (j.is_array()) {
    for (auto& x : j) add_approximations(x);
    return;
  }
  if (!j.is_object()) return;
  Json extra = Json::object();
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_string()) {
      const std::string s = it.value().get<std::string>();
      if (std::regex_match(s, rational)) extra[it.key() + "_approx"] = Rational::parse(s).approx();
    } else {
      add_approximations(it.value());
    }
  }
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
}

}  // namespace curvelab
