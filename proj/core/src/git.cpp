#include "curvelab/git.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "curvelab/elimination.hpp"
#include "curvelab/error.hpp"
#include "curvelab/factor.hpp"

namespace curvelab {

int weight(const MPoly& f, const WeightVector& w) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "weight of the zero polynomial");
  if (f.nvars() != 2) fail(ErrorCode::DimensionMismatch, "weight needs a bivariate polynomial");
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, v] : f.terms()) best = std::min(best, w.a * e[0] + w.b * e[1]);
  return best;
}

Rational weight_excess(const MPoly& f, const WeightVector& w, int d) {
  return Rational(weight(f, w)) - Rational(Integer(d * (w.a + w.b)), Integer(3));
}

std::vector<WeightVector> candidate_weights(const MPoly& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "candidate weights of the zero polynomial");
  std::vector<std::pair<int, int>> pts;
  for (const auto& [e, v] : f.terms()) pts.emplace_back(e[0], e[1]);
  std::sort(pts.begin(), pts.end());
  // Lower-left chain: lowest j for each i, then the convex part descending in j.
  std::vector<std::pair<int, int>> col;
  for (const auto& p : pts)
    if (col.empty() || col.back().first != p.first) col.push_back(p);
  std::vector<std::pair<int, int>> hull;
  for (const auto& p : col) {
    if (!hull.empty() && p.second >= hull.back().second) continue;
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& q = hull.back();
      const long cross = static_cast<long>(q.first - o.first) * (p.second - o.second) -
                         static_cast<long>(q.second - o.second) * (p.first - o.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::vector<WeightVector> out{{1, 0}, {0, 1}, {1, 1}};
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const int a = hull[i].second - hull[i + 1].second, b = hull[i + 1].first - hull[i].first;
    const int g = std::gcd(a, b);
    out.push_back({a / g, b / g});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string stability_status_name(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Unstable: return "Unstable";
    case StabilityStatus::StrictlySemistable: return "StrictlySemistable";
    case StabilityStatus::NoDestabilizerFound: return "NoDestabilizerFound";
  }
  return "Unknown";
}

namespace {

MPoly chart(const MPoly& form) {
  const MPoly s = form.substitute(2, FieldElement(1));
  MPoly out(germ_vars());
  for (const auto& [e, v] : s.terms()) out.add_term({e[0], e[1]}, v);
  return out;
}

Matrix local_frame(const ProjPoint& p) {
  const int l = p.pivot();
  Matrix m(3, std::vector<FieldElement>(3));
  int col = 0;
  for (int i = 0; i < 3; ++i)
    if (i != l) m[i][col++] = FieldElement(1);
  for (int i = 0; i < 3; ++i) m[i][2] = p.coords()[i];
  return m;
}

/// Frame for the line alpha*x1 + beta*x2 = 0 of the germ at p.
LinearChange line_frame(const ProjPoint& p, const FieldElement& alpha, const FieldElement& beta, int seed) {
  FieldElement c1, c2;
  if (seed == 0) {
    if (!alpha.is_zero()) c2 = FieldElement(1);
    else c1 = FieldElement(1);
  } else if (!(alpha - beta).is_zero()) {
    c1 = FieldElement(1);
    c2 = FieldElement(1);
  } else {
    c1 = FieldElement(1);
    c2 = FieldElement(-1);
  }
  const Matrix a{{alpha, beta}, {c1, c2}};
  const Matrix n = invert(a);
  Matrix lift(3, std::vector<FieldElement>(3));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) lift[i][j] = n[i][j];
  lift[2][2] = FieldElement(1);
  return LinearChange(local_frame(p)).then(LinearChange(lift));
}

Flag make_flag(const ProjPoint& p, const LinearChange& frame, int conjugates) {
  Flag f;
  f.point = p;
  f.frame = frame;
  f.line = frame.inverse_matrix()[0];
  f.conjugates = conjugates;
  return f;
}

/// Tries y -> y + t x, z -> z + e x + f y cancelling the weight-minimal
/// stratum for w; returns true and updates the flag when the excess strictly grows.
bool refine_once(const PlaneCurve& c, Flag& flag, const WeightVector& w) {
  const MPoly form = apply_linear_change(c.form(), flag.frame);
  if (!form.is_rational()) return false;
  const MPoly germ = chart(form);
  const int w0 = weight(germ, w);
  static const std::vector<std::string> vars{"x", "y", "z", "t", "e", "f"};
  std::vector<MPoly> images;
  for (int i = 0; i < 6; ++i) images.push_back(MPoly::variable(vars, i));
  images[1] = images[1] + images[3] * images[0];
  images[2] = images[2] + images[4] * images[0] + images[5] * images[1];
  images.resize(3);
  const MPoly moved = form.compose(images).substitute(2, FieldElement(1));
  // Coefficients of the stratum as polynomials in (t, e, f).
  static const std::vector<std::string> params{"t", "e", "f"};
  std::map<std::pair<int, int>, MPoly> strata;
  for (const auto& [e, v] : moved.terms()) {
    if (w.a * e[0] + w.b * e[1] > w0) continue;
    auto it = strata.try_emplace({e[0], e[1]}, MPoly(params)).first;
    it->second.add_term({e[3], e[4], e[5]}, v);
  }
  std::vector<MPoly> conditions;
  for (auto& [k, p] : strata) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return false;
    conditions.push_back(p);
  }
  if (conditions.empty()) return false;
  const SolveResult r = solve_system(conditions);
  for (const auto& pt : r.points) {
    if (!std::all_of(pt.begin(), pt.end(), [](const FieldElement& x) { return x.is_rational(); })) continue;
    const Matrix u{{FieldElement(1), FieldElement(0), FieldElement(0)},
                   {pt[0], FieldElement(1), FieldElement(0)},
                   {pt[1], pt[2], FieldElement(1)}};
    Flag next = flag;
    next.frame = flag.frame.then(LinearChange(u));
    if (weight(flag_germ(c, next), w) > w0) {
      next.line = next.frame.inverse_matrix()[0];
      next.refinement.push_back("y -> y + (" + pt[0].str() + ")x, z -> z + (" + pt[1].str() + ")x + (" +
                                pt[2].str() + ")y");
      flag = std::move(next);
      return true;
    }
  }
  return false;
}

}  // namespace

MPoly flag_germ(const PlaneCurve& c, const Flag& flag) { return chart(apply_linear_change(c.form(), flag.frame)); }

FlagList enumerate_flags(const PlaneCurve& c, const EngineOptions& options, int seed) {
  c.require_reduced();
  FlagList out;
  const SingularLocus locus = singular_points(c, options);
  out.truncated = locus.completeness != Completeness::Complete;
  const int cap = c.degree() * c.degree();
  for (const auto& sp : locus.points) {
    const CurveGerm g = localize(c, sp.point);
    const FieldPtr k = g.field;
    const MPoly cone = g.equation.homogeneous_part(g.equation.order());
    // cone(x1, x2) = x1^m * phi(x2 / x1), plus the line x1 = 0 when deg phi < m.
    std::vector<FieldElement> phi(cone.order() + 1);
    for (const auto& [e, v] : cone.terms()) phi[e[1]] = v;
    const UPoly tangent(phi);
    std::vector<std::pair<FieldElement, FieldElement>> lines;  // (alpha, beta)
    std::vector<int> conj;
    if (tangent.degree() >= 1) {
      for (const auto& fac : factor_univariate(tangent, k)) {
        const UPoly& psi = fac.factor;
        if (psi.degree() == 1) {
          lines.emplace_back((psi.coeff(0) / psi.coeff(1)).canonical(), FieldElement(1));
          conj.push_back(sp.conjugates);
        } else if (!k && psi.degree() <= options.max_extension_degree) {
          const FieldPtr ext = NumberField::make_unchecked(psi.to_qpoly());
          lines.emplace_back(-FieldElement::generator(ext), FieldElement(1));
          conj.push_back(sp.conjugates * psi.degree());
        } else {
          out.truncated = true;
        }
      }
    }
    if (tangent.degree() < g.equation.order()) {
      lines.emplace_back(FieldElement(1), FieldElement(0));
      conj.push_back(sp.conjugates);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      Flag flag = make_flag(sp.point, line_frame(sp.point, lines[i].first, lines[i].second, seed), conj[i]);
      for (int step = 0; step < cap; ++step) {
        bool improved = false;
        for (const auto& w : candidate_weights(flag_germ(c, flag))) {
          if (w.a < w.b) continue;
          ++out.refinements_tried;
          if (refine_once(c, flag, w)) {
            ++out.refinements_accepted;
            improved = true;
            break;
          }
        }
        if (!improved) break;
      }
      out.flags.push_back(std::move(flag));
    }
  }
  return out;
}

bool verify_witness(const PlaneCurve& c, const StabilityWitness& w) {
  const MPoly germ = flag_germ(c, w.flag);
  if (!germ.coeff({0, 0}).is_zero()) return false;
  const int wt = weight(germ, w.w);
  const Rational thr(Integer(c.degree() * (w.w.a + w.w.b)), Integer(3));
  return wt == w.weight && thr == w.threshold && Rational(wt) - thr == w.excess;
}

namespace {

struct SearchResult {
  std::optional<StabilityWitness> best;
  SearchSpace space;
};

SearchResult search(const PlaneCurve& c, const EngineOptions& options, int seed) {
  SearchResult r;
  const FlagList list = enumerate_flags(c, options, seed);
  r.space.flags = static_cast<int>(list.flags.size());
  r.space.truncated = list.truncated;
  r.space.refinements_tried = list.refinements_tried;
  r.space.refinements_accepted = list.refinements_accepted;
  const int d = c.degree();
  for (const auto& flag : list.flags) {
    const MPoly germ = flag_germ(c, flag);
    for (const auto& w : candidate_weights(germ)) {
      ++r.space.weights_evaluated;
      StabilityWitness cand;
      cand.weight = weight(germ, w);
      cand.threshold = Rational(Integer(d * (w.a + w.b)), Integer(3));
      cand.excess = Rational(cand.weight) - cand.threshold;
      if (r.best && !(r.best->excess < cand.excess)) continue;
      cand.flag = flag;
      cand.w = w;
      r.best = std::move(cand);
    }
  }
  return r;
}

StabilityStatus status_of(const std::optional<StabilityWitness>& best) {
  if (!best || best->excess < Rational(0)) return StabilityStatus::NoDestabilizerFound;
  return best->excess > Rational(0) ? StabilityStatus::Unstable : StabilityStatus::StrictlySemistable;
}

}  // namespace

StabilityVerdict stability(const PlaneCurve& c, const EngineOptions& options) {
  c.require_reduced();
  if (c.degree() < 3) fail(ErrorCode::InvalidArgument, "stability needs degree at least 3");
  SearchResult first = search(c, options, 0);
  const SearchResult second = search(c, options, 1);
  StabilityVerdict v;
  v.status = status_of(first.best);
  v.search_space = first.space;
  if (first.best) v.max_excess = first.best->excess;
  const StabilityStatus other = status_of(second.best);
  v.search_space.seeds_agree =
      other == v.status && (first.best ? second.best && second.best->excess == first.best->excess : !second.best);
  if (v.status != StabilityStatus::NoDestabilizerFound) {
    first.best->verified = verify_witness(c, *first.best);
    v.witness = std::move(first.best);
  }
  return v;
}

}  // namespace curvelab
