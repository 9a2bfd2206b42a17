#include <algorithm>
#include <set>

#include "support.hpp"

using namespace curvelab;
using namespace curvelab::test;

namespace {

using Pairs = std::multiset<std::pair<int, int>>;

Pairs divisors(const ResolutionTree& t) {
  Pairs out;
  for (const auto& d : t.divisors) out.insert({d.a, d.m});
  return out;
}

/// Orders of the restrictions to x1 = 0 and x2 = 0.
std::multiset<int> axis_orders(const CurveGerm& g) {
  std::multiset<int> out;
  for (int var = 0; var < 2; ++var) {
    const MPoly r = g.equation.substitute(var, FieldElement(0));
    out.insert(r.is_zero() ? -1 : r.order());
  }
  return out;
}

}  // namespace

TEST_SUITE("germ_resolution") {
  TEST_CASE("single blow-ups") {
    const auto node = blow_up(germ("x2^2 - x1^2"));
    REQUIRE(node.size() == 2);
    for (const auto& c : node) {
      CHECK(c.child.equation.order() == 1);
      const auto orders = axis_orders(c.child);
      CHECK(orders.count(1) >= 1);
      CHECK(*orders.rbegin() == 1);
    }
    const auto cusp = blow_up(germ("x2^2 - x1^3"));
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].child.equation.order() == 1);
    CHECK(axis_orders(cusp[0].child) == std::multiset<int>{1, 2});
    const auto k3 = blow_up(germ("x1^3 - x2^4"));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].child.equation.order() == 1);
    CHECK(axis_orders(k3[0].child) == std::multiset<int>{1, 3});
  }

  TEST_CASE("conjugate tangent directions") {
    const auto kids = blow_up(germ("x2^2 + x1^2"));
    REQUIRE(kids.size() == 1);
    CHECK(kids[0].conjugates == 2);
    EngineOptions tight;
    tight.max_extension_degree = 1;
    CHECK(resolve(germ("x2^2 + x1^2"), tight).status == ResolutionStatus::Resolved);
    CHECK(resolve(germ("(x2^2 + x1^2)^2 + x1^5"), tight).status == ResolutionStatus::ExtensionLimit);
  }

  TEST_CASE("resolution divisors") {
    CHECK(divisors(resolve(germ("x2^2 - x1^2"))) == Pairs{{1, 2}});
    CHECK(divisors(resolve(germ("x2^2 - x1^3"))) == Pairs{{1, 2}, {2, 3}, {4, 6}});
    CHECK(divisors(resolve(germ("x2^2 - x1^4"))) == Pairs{{1, 2}, {2, 4}});
    CHECK(resolve(germ("x1 + x2^2")).divisors.empty());
  }

  TEST_CASE("depth cap") {
    EngineOptions shallow;
    shallow.depth_cap = 2;
    CHECK(error_of([&] { (void)resolve(germ("x2^2 - x1^13"), shallow); }) == ErrorCode::DepthExceeded);
    CHECK(error_of([] { (void)resolve(germ("x1 + 1")); }) == ErrorCode::PointNotOnCurve);
  }

  TEST_CASE("equisingularity types") {
    CHECK_FALSE(equisingularity_type(germ("x2^2 - x1^2")) == equisingularity_type(germ("x2^2 - x1^3")));
    CHECK(equisingularity_type(germ("x2^2 - x1^3")) == equisingularity_type(germ("(x2 + x1)^2 - x1^3")));
    CHECK_FALSE(equisingularity_type(germ("x1^3 - x1*x2^3")) == equisingularity_type(germ("x1^3 - x2^4")));
    const auto t = equisingularity_type(germ("x2^2 - x1^3"));
    REQUIRE(t.multiplicity_sequences.size() == 1);
    CHECK(t.multiplicity_sequences[0] == std::vector<int>{2, 1, 1});
  }

  TEST_CASE("branch counts and contacts") {
    CHECK(branch_count(germ("x2^2 - x1^2")) == 2);
    CHECK(branch_count(germ("x2^2 - x1^3")) == 1);
    const CurveGerm p = localize(ploski_curve(4), pt("0:0:1"));
    CHECK(branch_count(p) == 2);
    const auto t = equisingularity_type(p);
    REQUIRE(t.contacts.size() == 2);
    CHECK(t.contacts[0][1] == 4);
    CHECK(branch_count(germ("x1*x2*(x1 - x2)*(x1 + x2)")) == 4);
  }

  TEST_CASE("root multiplicity of the normal forms") {
    for (int r = 2; r <= 7; ++r) {
      const ResolutionTree t = resolve(make_germ(normal_form_germ(ThresholdTag::TildeK, r)));
      CHECK(t.root().multiplicity == r);
      CHECK(make_germ(normal_form_germ(ThresholdTag::T, r)).equation.order() == r);
    }
  }

  TEST_CASE("discrepancy bookkeeping") {
    for (const auto& text : {"x2^2 - x1^5", "x1^3 - x2^7", "x2*(x2 - x1^2)*(x2 + x1^3)"}) {
      const ResolutionTree t = resolve(germ(text));
      for (const auto& d : t.divisors) {
        int a = 1, m = d.center_mult;
        for (int parent : d.parents) {
          a += t.divisors[parent].a;
          m += t.divisors[parent].m;
        }
        CHECK(d.a == a);
        CHECK(d.m == m);
        CHECK(d.parents.size() <= 2);
      }
    }
  }

  TEST_CASE("equisingularity type is invariant under seeded linear changes") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const PlaneCurve c = random_singular_curve(4 + seed % 3, seed);
      const ProjPoint o = pt("0:0:1");
      const std::string code = equisingularity_type(localize(c, o)).code;
      const Moved m = move(c, o, random_change(rng));
      CHECK(equisingularity_type(localize(m.curve, m.point)).code == code);
    }
  }
}
