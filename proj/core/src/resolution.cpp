#include "curvelab/resolution.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "curvelab/error.hpp"
#include "curvelab/factor.hpp"

namespace curvelab {
namespace {

/// g(u, u*t) / u^m in the coordinates (u, t).
MPoly chart_a(const MPoly& g, int m) {
  MPoly h(g.vars());
  for (const auto& [e, c] : g.terms()) h.add_term({e[0] + e[1] - m, e[1]}, c);
  return h;
}

/// g(s*v, v) / v^m in the coordinates (s, v).
MPoly chart_b(const MPoly& g, int m) {
  MPoly h(g.vars());
  for (const auto& [e, c] : g.terms()) h.add_term({e[0], e[0] + e[1] - m}, c);
  return h;
}

/// h(u, t + c).
MPoly shift_second(const MPoly& h, const FieldElement& c) {
  if (c.is_zero()) return h;
  const auto& vars = h.vars();
  return h.compose({MPoly::variable(vars, 0), MPoly::variable(vars, 1) + MPoly::constant(vars, c)});
}

/// g_m(1, t): the tangent cone as a polynomial in the slope t = v/u.
UPoly tangent_polynomial(const MPoly& g, int m) {
  std::vector<FieldElement> c(static_cast<std::size_t>(m) + 1);
  for (const auto& [e, v] : g.terms())
    if (e[0] + e[1] == m) c[e[1]] = v;
  return UPoly(std::move(c));
}

bool tangent_contains_u_axis(const MPoly& g, int m) {
  // {u = 0} is in the tangent cone iff the v^m coefficient vanishes.
  return g.coeff({0, m}).is_zero();
}

bool is_snc(const NearPoint& p) {
  if (p.multiplicity != 1) return false;
  const int divisors = (p.axis_divisor[0] >= 0) + (p.axis_divisor[1] >= 0);
  if (divisors == 0) return true;
  if (divisors == 2) return false;
  const FieldElement a = p.equation.coeff({1, 0}), b = p.equation.coeff({0, 1});
  return p.axis_divisor[0] >= 0 ? !b.is_zero() : !a.is_zero();
}

struct Builder {
  const EngineOptions& opt;
  ResolutionTree tree;

  int add_point(NearPoint p) {
    p.id = static_cast<int>(tree.points.size());
    if (p.parent >= 0) tree.points[p.parent].children.push_back(p.id);
    tree.points.push_back(std::move(p));
    return tree.points.back().id;
  }

  void mark_extension_limit(const std::string& why) {
    tree.status = ResolutionStatus::ExtensionLimit;
    if (tree.note.empty()) tree.note = why;
  }

  void blow_up_point(int id) {
    NearPoint& p = tree.points[id];
    if (p.depth >= opt.depth_cap)
      fail(ErrorCode::DepthExceeded, "resolution exceeded depth " + std::to_string(opt.depth_cap));
    DivisorRecord d;
    d.id = static_cast<int>(tree.divisors.size());
    d.center = id;
    d.center_mult = p.multiplicity;
    d.conjugates = p.conjugates;
    d.a = 1;
    d.m = p.multiplicity;
    for (int axis : p.axis_divisor) {
      if (axis < 0) continue;
      d.parents.push_back(axis);
      d.a += tree.divisors[axis].a;
      d.m += tree.divisors[axis].m;
    }
    std::sort(d.parents.begin(), d.parents.end());
    p.divisor = d.id;
    tree.divisors.push_back(d);

    // Copy what the children need: add_point may reallocate.
    const MPoly g = p.equation;
    const FieldPtr k = p.field;
    const int m = p.multiplicity, conj = p.conjugates, depth = p.depth;
    const int old_axes[2] = {p.axis_divisor[0], p.axis_divisor[1]};
    const MPoly ga = chart_a(g, m);

    const UPoly phi = tangent_polynomial(g, m);
    if (phi.degree() >= 1) {
      for (const auto& f : factor_univariate(phi, k)) {
        const UPoly& psi = f.factor;
        NearPoint child;
        child.parent = id;
        child.depth = depth + 1;
        child.axis_divisor[0] = d.id;
        if (psi.degree() == 1) {
          const FieldElement c = (-psi.coeff(0) / psi.coeff(1)).canonical();
          child.equation = shift_second(ga, c);
          child.field = k;
          child.conjugates = conj;
          if (c.is_zero()) child.axis_divisor[1] = old_axes[1];
        } else if (f.multiplicity == 1) {
          // A simple direction off the old divisors is already SNC.
          child.direction = psi.str("t");
          child.field = k;
          child.conjugates = conj * psi.degree();
          child.multiplicity = 1;
          add_point(std::move(child));
          continue;
        } else if (!k && psi.degree() <= opt.max_extension_degree) {
          FieldPtr ext = NumberField::make_unchecked(psi.to_qpoly());
          child.equation = shift_second(ga, FieldElement::generator(ext));
          child.field = ext;
          child.conjugates = conj * psi.degree();
        } else {
          mark_extension_limit("tangent direction " + psi.str("t") + " needs a further extension");
          continue;
        }
        child.multiplicity = child.equation.order();
        add_point(std::move(child));
      }
    }
    if (tangent_contains_u_axis(g, m)) {
      NearPoint child;
      child.parent = id;
      child.depth = depth + 1;
      child.equation = chart_b(g, m);
      child.field = k;
      child.conjugates = conj;
      child.axis_divisor[0] = old_axes[0];
      child.axis_divisor[1] = d.id;
      child.multiplicity = child.equation.order();
      add_point(std::move(child));
    }
  }

  void run(const CurveGerm& germ) {
    NearPoint root;
    root.equation = germ.equation.renamed(germ_vars());
    root.field = germ.equation.field();
    root.multiplicity = root.equation.order();
    add_point(std::move(root));
    for (std::size_t i = 0; i < tree.points.size(); ++i) {
      const NearPoint& p = tree.points[i];
      if (!p.direction.empty()) continue;
      const bool needs = (i == 0) ? p.multiplicity >= 2 : !is_snc(p);
      if (needs) blow_up_point(static_cast<int>(i));
    }
    collect_branches();
  }

  void collect_branches() {
    for (const auto& p : tree.points) {
      if (p.blown_up()) continue;
      Branch b;
      b.leaf = p.id;
      b.copies = p.conjugates;
      for (int q = p.parent; q >= 0; q = tree.points[q].parent) b.centers.push_back(q);
      std::reverse(b.centers.begin(), b.centers.end());
      // Multiplicity at a center = sum over later path points proximate to it.
      const std::size_t n = b.centers.size();
      b.multiplicities.assign(n, 0);
      for (std::size_t i = n; i-- > 0;) {
        const int div = tree.points[b.centers[i]].divisor;
        int e = p.lies_on(div) ? 1 : 0;
        for (std::size_t j = i + 1; j < n; ++j)
          if (tree.points[b.centers[j]].lies_on(div)) e += b.multiplicities[j];
        b.multiplicities[i] = e;
      }
      tree.branches.push_back(std::move(b));
    }
  }
};

// ---------------------------------------------------------------- canonical code

std::string proximity_code(const ResolutionTree& t, const NearPoint& p) {
  std::vector<int> rel;
  for (int axis : p.axis_divisor) {
    if (axis < 0) continue;
    rel.push_back(p.depth - t.points[t.divisors[axis].center].depth);
  }
  std::sort(rel.begin(), rel.end());
  std::string s = "[";
  for (std::size_t i = 0; i < rel.size(); ++i) s += (i ? "," : "") + std::to_string(rel[i]);
  return s + "]";
}

std::string node_code(const ResolutionTree& t, int id) {
  const NearPoint& p = t.points[id];
  if (!p.blown_up()) return "L" + proximity_code(t, p);
  std::vector<std::string> kids;
  for (int c : p.children) {
    const std::string code = node_code(t, c);
    const int copies = t.points[c].conjugates / p.conjugates;
    for (int i = 0; i < copies; ++i) kids.push_back(code);
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + std::to_string(p.multiplicity) + proximity_code(t, p);
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

int ResolutionTree::branch_count() const {
  int r = 0;
  for (const auto& b : branches) r += b.copies;
  return r;
}

ResolutionTree resolve(const CurveGerm& g, const EngineOptions& options) {
  if (g.equation.is_zero()) fail(ErrorCode::InvalidArgument, "cannot resolve the zero germ");
  if (g.equation.nvars() != 2) fail(ErrorCode::DimensionMismatch, "germ equation must be bivariate");
  if (g.equation.order() < 1) fail(ErrorCode::PointNotOnCurve, "germ equation does not vanish at the origin");
  Builder b{options, {}};
  b.run(g);
  return std::move(b.tree);
}

std::vector<BlowUpChild> blow_up(const CurveGerm& g, const EngineOptions& options) {
  const MPoly& f = g.equation;
  const int m = f.order();
  if (m < 1) fail(ErrorCode::PointNotOnCurve, "germ equation does not vanish at the origin");
  const FieldPtr k = f.field();
  const MPoly ga = chart_a(f, m);
  std::vector<BlowUpChild> out;
  auto push = [&](std::string dir, MPoly eq, int conj) {
    BlowUpChild c;
    c.direction = std::move(dir);
    c.child = make_germ(eq);
    c.conjugates = conj;
    out.push_back(std::move(c));
  };
  const UPoly phi = tangent_polynomial(f, m);
  if (phi.degree() >= 1) {
    for (const auto& fac : factor_univariate(phi, k)) {
      const UPoly& psi = fac.factor;
      if (psi.degree() == 1) {
        const FieldElement c = (-psi.coeff(0) / psi.coeff(1)).canonical();
        push("t=" + c.str(), shift_second(ga, c), 1);
      } else if (!k && psi.degree() <= options.max_extension_degree) {
        FieldPtr ext = NumberField::make_unchecked(psi.to_qpoly());
        push("t=a, a root of " + psi.str("a"), shift_second(ga, FieldElement::generator(ext)), psi.degree());
      } else {
        fail(ErrorCode::ExtensionLimit, "tangent direction " + psi.str("t") + " needs a further extension");
      }
    }
  }
  if (tangent_contains_u_axis(f, m)) push("inf", chart_b(f, m), 1);
  return out;
}

EquisingularityType equisingularity_type(const ResolutionTree& t) {
  if (t.status != ResolutionStatus::Resolved)
    fail(ErrorCode::ExtensionLimit, "resolution incomplete: " + t.note);
  EquisingularityType et;
  et.code = node_code(t, 0);

  struct Copy {
    const Branch* branch;
    int index;
  };
  std::vector<Copy> copies;
  for (const auto& b : t.branches)
    for (int i = 0; i < b.copies; ++i) copies.push_back({&b, i});
  auto group = [&](const Copy& c, int center) {
    const int node_conj = t.points[center].conjugates;
    return c.index / (c.branch->copies / node_conj);
  };
  const std::size_t n = copies.size();
  std::vector<std::vector<int>> contact(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Branch& bi = *copies[i].branch;
      const Branch& bj = *copies[j].branch;
      int sum = 0;
      for (std::size_t a = 0; a < bi.centers.size(); ++a) {
        const int c = bi.centers[a];
        auto it = std::find(bj.centers.begin(), bj.centers.end(), c);
        if (it == bj.centers.end()) continue;
        if (group(copies[i], c) != group(copies[j], c)) continue;
        sum += bi.multiplicities[a] * bj.multiplicities[static_cast<std::size_t>(it - bj.centers.begin())];
      }
      contact[i][j] = sum;
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return copies[a].branch->multiplicities < copies[b].branch->multiplicities;
  });
  for (std::size_t i : order) et.multiplicity_sequences.push_back(copies[i].branch->multiplicities);
  et.contacts.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) et.contacts[i][j] = contact[order[i]][order[j]];
  for (const auto& p : t.points) {
    if (!p.blown_up()) continue;
    for (int axis : p.axis_divisor)
      if (axis >= 0) et.proximities.emplace_back(p.id, t.divisors[axis].center);
  }
  return et;
}

EquisingularityType equisingularity_type(const CurveGerm& g, const EngineOptions& options) {
  return equisingularity_type(resolve(g, options));
}

int branch_count(const CurveGerm& g, const EngineOptions& options) {
  const ResolutionTree t = resolve(g, options);
  if (t.status != ResolutionStatus::Resolved) fail(ErrorCode::ExtensionLimit, "resolution incomplete: " + t.note);
  return t.branch_count();
}

}  // namespace curvelab
