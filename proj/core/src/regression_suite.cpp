#include "curvelab/regression_suite.hpp"

#include <random>
#include <sstream>

#include "curvelab/classify.hpp"
#include "curvelab/error.hpp"
#include "curvelab/generators.hpp"
#include "curvelab/git.hpp"
#include "curvelab/surface.hpp"

namespace curvelab {

namespace {

const ProjPoint& origin() {
  static const ProjPoint o = ProjPoint::from_rationals({0, 0, 1});
  return o;
}

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

/// Collects failed checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << show(got) << ", want " << show(want);
    expect(got == want, s.str());
  }
  CriterionResult result(int id, const std::string& name) const {
    CriterionResult r{id, name, failures_.empty(), failures_};
    if (r.passed) r.details.push_back(std::to_string(checks_) + " checks passed");
    return r;
  }

 private:
  static std::string show(const Rational& q) { return q.str(); }
  static std::string show(const std::string& s) { return s; }
  static std::string show(int v) { return std::to_string(v); }
  int checks_ = 0;
  std::vector<std::string> failures_;
};

PlaneCurve nodal_cubic() { return PlaneCurve::parse("y^2*z - x^2*(x + z)"); }
PlaneCurve cuspidal_cubic() { return PlaneCurve::parse("y^2*z - x^3"); }
PlaneCurve conic_tangent_line() { return PlaneCurve::parse("y*(y*z - x^2)"); }
/// Smooth cubic y^2 z = x^3 + x z^2 with its tangent z = 0 at the flex [0:1:0].
PlaneCurve inflectional_quartic() { return PlaneCurve::parse("z*(y^2*z - x^3 - x*z^2)"); }
/// Quartic with one A1 and one A2 point.
PlaneCurve mild_quartic() { return PlaneCurve::parse("y^2*z^2 - x^3*z - x^4 - y^4"); }

struct QuarticRow {
  std::string name;
  PlaneCurve curve;
  Rational lct;
  int mu;  ///< 0 when not asserted
};

std::vector<QuarticRow> quartic_rows() {
  return {{"A7", ploski_curve(4), frac(5, 8), 7},
          {"D5", tk_curve(4, ThresholdTag::TildeK), frac(5, 8), 0},
          {"D6", tk_curve(4, ThresholdTag::TildeT), frac(3, 5), 6},
          {"E6", tk_curve(4, ThresholdTag::K), frac(7, 12), 6},
          {"E7", tk_curve(4, ThresholdTag::T), frac(5, 9), 7}};
}

const std::vector<ThresholdTag>& family_tags() {
  static const std::vector<ThresholdTag> tags{ThresholdTag::T, ThresholdTag::K, ThresholdTag::TildeT, ThresholdTag::TildeK};
  return tags;
}

struct KuwataTuple {
  int n1, n2, k, m1, m2;
};

std::vector<KuwataTuple> kuwata_tuples(int count) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> n(0, 3), k(0, 3), m(1, 4);
  std::vector<KuwataTuple> out;
  while (static_cast<int>(out.size()) < count) {
    KuwataTuple t{n(rng), n(rng), k(rng), m(rng), m(rng)};
    try {
      kuwata_lct(t.n1, t.n2, t.k, t.m1, t.m2);
    } catch (const Error&) {
      continue;
    }
    out.push_back(t);
  }
  return out;
}

std::string tuple_str(const KuwataTuple& t) {
  std::ostringstream s;
  s << "(" << t.n1 << "," << t.n2 << "," << t.k << "," << t.m1 << "," << t.m2 << ")";
  return s.str();
}

/// Random singular curves of degree 3..6 without a point of multiplicity d
/// and with a complete singular locus.
std::vector<PlaneCurve> non_cone_corpus(int count, std::uint64_t first_seed, int dmin, int dmax,
                                        const EngineOptions& options) {
  std::vector<PlaneCurve> out;
  for (std::uint64_t seed = first_seed; static_cast<int>(out.size()) < count; ++seed) {
    const int d = dmin + static_cast<int>(seed % static_cast<std::uint64_t>(dmax - dmin + 1));
    PlaneCurve c = random_singular_curve(d, seed);
    const SingularLocus locus = singular_points(c, options);
    if (locus.completeness != Completeness::Complete) continue;
    bool cone = false;
    for (const auto& sp : locus.points) cone = cone || sp.multiplicity == d;
    if (!cone) out.push_back(std::move(c));
  }
  return out;
}

CriterionResult cubic_table(const EngineOptions& o) {
  Checker ck;
  ck.equal(lct_at_point(nodal_cubic(), origin(), o).value, Rational(1), "A1 cubic lct");
  ck.equal(lct_at_point(cuspidal_cubic(), origin(), o).value, frac(5, 6), "A2 cubic lct");
  ck.equal(lct_at_point(conic_tangent_line(), origin(), o).value, frac(3, 4), "A3 cubic lct");
  ck.equal(classify(nodal_cubic(), origin(), o).alias, std::string("A1"), "node type");
  ck.equal(classify(cuspidal_cubic(), origin(), o).alias, std::string("A2"), "cusp type");
  ck.equal(classify(conic_tangent_line(), origin(), o).alias, std::string("A3"), "tacnode type");
  return ck.result(1, "cubic lct table");
}

CriterionResult quartic_table(const EngineOptions& o) {
  Checker ck;
  for (const auto& row : quartic_rows()) {
    ck.equal(classify(row.curve, origin(), o).alias, row.name, row.name + " realized");
    ck.equal(lct_at_point(row.curve, origin(), o).value, row.lct, row.name + " lct");
    if (row.mu > 0) ck.equal(milnor(row.curve, origin(), o), row.mu, row.name + " mu");
  }
  return ck.result(2, "quartic lct and Milnor table");
}

CriterionResult threshold_sweep(const EngineOptions& o) {
  Checker ck;
  for (int d = 4; d <= 8; ++d)
    for (ThresholdTag tag : family_tags()) {
      const std::string label = threshold_tag_name(tag) + " d=" + std::to_string(d);
      const ThresholdClass t = threshold_class(tk_curve(d, tag), origin(), o);
      ck.equal(threshold_tag_name(t.tag), threshold_tag_name(tag), label + " tag");
      ck.equal(t.r, d - 1, label + " r");
      ck.equal(t.computed_lct, threshold_value(tag, d), label + " lct");
    }
  return ck.result(3, "five-threshold family sweep d=4..8");
}

CriterionResult kuwata_oracle(const EngineOptions& o) {
  Checker ck;
  for (const auto& t : kuwata_tuples(200)) {
    const Rational closed = kuwata_lct(t.n1, t.n2, t.k, t.m1, t.m2);
    const Rational resolved = lct_of_germ(make_germ(kuwata_germ(t.n1, t.n2, t.k, t.m1, t.m2)), o).value;
    ck.equal(resolved, closed, "tuple " + tuple_str(t));
  }
  return ck.result(4, "monomial-times-binomial closed form vs resolution (200 tuples)");
}

CriterionResult cone_characterization(const EngineOptions& o) {
  Checker ck;
  for (int d = 3; d <= 8; ++d) ck.equal(lct_global(cone_curve(d), o).value, frac(2, d), "cone d=" + std::to_string(d));
  int i = 0;
  for (const auto& c : non_cone_corpus(50, 1, 3, 6, o)) {
    const GlobalLct g = lct_global(c, o);
    ck.expect(!g.partial && g.value > frac(2, c.degree()),
              "non-cone #" + std::to_string(i) + " " + c.form().str() + ": lct " + g.value.str());
    ++i;
  }
  return ck.result(5, "cone characterization");
}

CriterionResult ploski_suite(const EngineOptions& o) {
  Checker ck;
  for (int d : {4, 5, 6, 7, 8}) {
    const std::string label = "d=" + std::to_string(d);
    const PlaneCurve c = ploski_curve(d);
    ck.equal(lct_global(c, o).value, frac(5, 2 * d), label + " lct");
    const SingularityClass k = classify(c, origin(), o);
    ck.equal(k.mu, (d - 1) * (d - 1) - d / 2, label + " mu");
    ck.equal(singularity_tag_name(k.tag), std::string(d % 2 == 0 ? "PloskiEven" : "PloskiOdd"), label + " tag");
    const PloskiReport r = ploski_extremality_check(c, o);
    ck.expect(r.equality && r.recognized, label + " extremality check");
  }
  return ck.result(6, "Ploski curves");
}

CriterionResult wall_quintic_criterion(const EngineOptions& o) {
  Checker ck;
  const PlaneCurve c = wall_quintic();
  ck.equal(lct_at_point(c, origin(), o).value, frac(15, 26), "lct at [0:0:1]");
  const SingularityClass k = classify(c, origin(), o);
  ck.equal(k.multiplicity, 2, "multiplicity");
  ck.equal(k.branches, 1, "branches");
  ck.equal(k.mu, 12, "mu");
  ck.equal(stability_status_name(stability(c, o).status), std::string("NoDestabilizerFound"), "GIT verdict");
  return ck.result(7, "Wall quintic");
}

CriterionResult git_verdicts(const EngineOptions& o) {
  Checker ck;
  auto verdict = [&](const PlaneCurve& c, StabilityStatus want, const std::string& label) {
    const StabilityVerdict v = stability(c, o);
    ck.equal(stability_status_name(v.status), stability_status_name(want), label);
    if (want != StabilityStatus::NoDestabilizerFound)
      ck.expect(v.witness && v.witness->verified && verify_witness(c, *v.witness), label + " witness verified");
    if (want == StabilityStatus::StrictlySemistable)
      ck.expect(v.witness && v.witness->excess.is_zero(), label + " zero-excess witness");
    ck.expect(v.search_space.seeds_agree, label + " frame seeds agree");
  };
  verdict(nodal_cubic(), StabilityStatus::StrictlySemistable, "nodal cubic");
  verdict(cuspidal_cubic(), StabilityStatus::Unstable, "cuspidal cubic");
  const PlaneCurve mild = mild_quartic();
  for (const auto& sp : singular_points(mild, o).points) {
    const std::string a = classify(mild, sp.point, o).alias;
    ck.expect(a == "A1" || a == "A2", "mild quartic point " + sp.point.str() + " is " + a);
  }
  verdict(mild, StabilityStatus::NoDestabilizerFound, "A1/A2 quartic");
  verdict(inflectional_quartic(), StabilityStatus::Unstable, "cubic plus inflectional tangent");
  ck.equal(lct_global(inflectional_quartic(), o).value, frac(2, 3), "cubic plus inflectional tangent lct");
  verdict(ploski_curve(4), StabilityStatus::StrictlySemistable, "even Ploski quartic");
  verdict(ploski_curve(5), StabilityStatus::Unstable, "odd Ploski quintic");
  return ck.result(8, "GIT verdicts");
}

CriterionResult stability_audits(const EngineOptions& o) {
  Checker ck;
  int i = 0;
  for (const auto& c : non_cone_corpus(100, 5000, 4, 6, o)) {
    const int d = c.degree();
    const std::string label = "corpus #" + std::to_string(i++) + " " + c.form().str();
    const GlobalLct g = lct_global(c, o);
    const StabilityVerdict v = stability(c, o);
    const bool unstable = v.status == StabilityStatus::Unstable;
    ck.expect(!g.partial, label + ": partial lct");
    if (g.value >= frac(3, d)) ck.expect(!unstable, label + ": lct " + g.value.str() + " >= 3/d but Unstable");
    if (g.value < frac(5, 2 * d))
      ck.expect(unstable && v.witness && v.witness->verified, label + ": lct " + g.value.str() + " < 5/(2d) but not Unstable");
    for (const auto& sp : singular_points(c, o).points)
      if (3 * sp.multiplicity > 2 * d) ck.expect(unstable, label + ": m > 2d/3 but not Unstable");
  }
  return ck.result(9, "GIT stability audits on a 100-curve corpus");
}

CriterionResult surface_probe(const EngineOptions& o) {
  Checker ck;
  const ProjPoint O = ProjPoint::from_rationals({0, 0, 0, 1});
  SurfaceForm s = quartic_surface_a1();
  const Smoothness sm = verify_smooth(s);
  ck.expect(sm == Smoothness::Verified, "example quartic smoothness: " + smoothness_name(sm) +
                                            (s.witness ? " (all partials vanish at " + s.witness->str() + ")" : ""));
  // The remaining checks do not depend on the smoothness status.
  SurfaceForm assumed = quartic_surface_a1();
  verify_smooth(assumed, true);
  const AlphaProbeReport r = alpha_probe(assumed, O, o);
  const SingularityClass k = classify(r.section.germ, 4, o);
  ck.equal(k.alias, std::string("A1"), "tangent section type at O");
  ck.equal(r.lct, Rational(1), "tangent section lct at O");
  ck.expect(r.dichotomy == AlphaDichotomy::AlphaLowerBound && r.value == frac(5, 8),
            "alpha probe: want AlphaLowerBound(5/8), got value " + r.value.str());
  for (int d : {4, 5}) {
    SurfaceForm star = star_surface(d);
    const std::string label = "star surface d=" + std::to_string(d);
    ck.expect(verify_smooth(star) == Smoothness::Verified, label + " smoothness");
    const AlphaProbeReport a = alpha_probe(star, O, o);
    ck.expect(a.star_point, label + " star point");
    ck.expect(a.dichotomy == AlphaDichotomy::AlphaEquals && a.value == frac(2, d),
              label + ": want AlphaEquals(2/d), got " + a.value.str());
  }
  return ck.result(10, "surface probe");
}

CriterionResult milnor_cross_validation(const EngineOptions& o) {
  Checker ck;
  std::vector<PlaneCurve> curves{nodal_cubic(), cuspidal_cubic(), conic_tangent_line(), inflectional_quartic(),
                                 mild_quartic(), wall_quintic()};
  for (const auto& row : quartic_rows()) curves.push_back(row.curve);
  for (int d = 4; d <= 8; ++d)
    for (ThresholdTag tag : family_tags()) curves.push_back(tk_curve(d, tag));
  for (int d = 3; d <= 8; ++d) curves.push_back(cone_curve(d));
  for (int d : {4, 5, 6, 7, 8}) curves.push_back(ploski_curve(d));
  for (auto& c : non_cone_corpus(50, 1, 3, 6, o)) curves.push_back(std::move(c));
  int points = 0;
  for (const auto& c : curves)
    for (const auto& sp : singular_points(c, o).points) {
      if (!sp.point.is_rational()) continue;
      ++points;
      ck.equal(milnor(c, sp.point, o), milnor_oracle(c, sp.point), c.form().str() + " at " + sp.point.str());
    }
  for (const auto& t : kuwata_tuples(200)) {
    const CurveGerm g = make_germ(kuwata_germ(t.n1, t.n2, t.k, t.m1, t.m2));
    ck.equal(milnor(g, o), milnor_oracle(g), "germ " + tuple_str(t));
  }
  ck.expect(points > 0, "no rational singular points collected");
  return ck.result(11, "Milnor number cross-validation");
}

using Runner = CriterionResult (*)(const EngineOptions&);

const std::vector<Runner>& runners() {
  static const std::vector<Runner> r{cubic_table,     quartic_table,  threshold_sweep,
                                     kuwata_oracle,   cone_characterization,   ploski_suite,
                                     wall_quintic_criterion, git_verdicts, stability_audits,
                                     surface_probe,   milnor_cross_validation};
  return r;
}

}  // namespace

const std::vector<CriterionInfo>& regression_criteria() {
  static const std::vector<CriterionInfo> info{
      {1, "cubic lct table"},
      {2, "quartic lct and Milnor table"},
      {3, "five-threshold family sweep d=4..8"},
      {4, "monomial-times-binomial closed form vs resolution (200 tuples)"},
      {5, "cone characterization"},
      {6, "Ploski curves"},
      {7, "Wall quintic"},
      {8, "GIT verdicts"},
      {9, "GIT stability audits on a 100-curve corpus"},
      {10, "surface probe"},
      {11, "Milnor number cross-validation"},
  };
  return info;
}

CriterionResult run_criterion(int id, const EngineOptions& options) {
  if (id < 1 || id > static_cast<int>(runners().size())) fail(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  try {
    return runners()[static_cast<std::size_t>(id - 1)](options);
  } catch (const Error& e) {
    return {id, regression_criteria()[static_cast<std::size_t>(id - 1)].name, false,
            {std::string(error_code_name(e.code())) + ": " + e.what()}};
  }
}

std::vector<CriterionResult> run_regression_suite(const EngineOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : regression_criteria()) out.push_back(run_criterion(c.id, options));
  return out;
}

}  // namespace curvelab
