#include <set>

#include "support.hpp"

using namespace curvelab;
using namespace curvelab::test;

TEST_SUITE("curve_model") {
  TEST_CASE("curves must be reduced forms") {
    CHECK(error_of([] { (void)curve("x^2*y"); }) == ErrorCode::NotReduced);
    CHECK(error_of([] { (void)curve("x^2 + y"); }) == ErrorCode::InvalidArgument);
    const PlaneCurve nr = PlaneCurve::parse("x^2*y", true);
    CHECK_FALSE(nr.is_reduced());
    CHECK(error_of([&] { (void)singular_points(nr); }) == ErrorCode::NotReduced);
  }

  TEST_CASE("singular points") {
    CHECK(singular_points(curve("y*z - x^2")).points.empty());
    const auto nodal = singular_points(curve("z*y^2 - x^2*(x + z)"));
    CHECK(nodal.completeness == Completeness::Complete);
    REQUIRE(nodal.points.size() == 1);
    CHECK(nodal.points[0].point == pt("0:0:1"));
    CHECK(nodal.points[0].multiplicity == 2);
    const auto wall = singular_points(wall_quintic());
    REQUIRE(wall.points.size() == 1);
    CHECK(wall.points[0].point == pt("0:0:1"));
  }

  TEST_CASE("points at infinity and conjugate points") {
    // Nodes at [0:1:0], [1:0:0] and the four points (+-sqrt2, +-sqrt3).
    const PlaneCurve c = curve("(x^2 - 2*z^2)*(y^2 - 3*z^2)");
    const auto locus = singular_points(c);
    CHECK(locus.completeness == Completeness::Complete);
    int total = 0;
    for (const auto& p : locus.points) total += p.conjugates;
    CHECK(total == 6);
    EngineOptions tight;
    tight.max_extension_degree = 1;
    CHECK(singular_points(c, tight).completeness == Completeness::TruncatedByExtensionLimit);
  }

  TEST_CASE("multiplicity") {
    CHECK(multiplicity_at(cone_curve(4), pt("0:0:1")) == 4);
    CHECK(multiplicity_at(curve("y^2*z - x^3"), pt("0:0:1")) == 2);
    CHECK(multiplicity_at(curve("y*z - x^2"), pt("1:1:1")) == 1);
    CHECK(multiplicity_at(curve("y*z - x^2"), pt("1:0:1")) == 0);
  }

  TEST_CASE("localization") {
    const CurveGerm g = localize(curve("y^2*z - x^3"), pt("0:0:1"));
    const MPoly want = germ_poly("x2^2 - x1^3");
    CHECK((g.equation == want || g.equation == -want));
    const CurveGerm h = localize(curve("y^2*z - x^3"), pt("0:1:0"));
    CHECK(h.equation.order() == 1);
    CHECK(error_of([] { (void)localize(curve("y^2*z - x^3"), pt("1:2:1")); }) == ErrorCode::PointNotOnCurve);
  }

  TEST_CASE("localization over a quadratic field") {
    const PlaneCurve c = curve("x^3 - 2*x*y^2 + z^3");
    const FieldPtr k = NumberField::make(QPoly({Rational(-2), Rational(0), Rational(1)}));
    const ProjPoint q(std::vector<FieldElement>{FieldElement::generator(k), FieldElement(1), FieldElement(0)});
    REQUIRE(c.contains(q));
    const CurveGerm g = localize(c, q);
    CHECK(field_degree(g.field) == 2);
    CHECK(field_degree(g.equation.field()) == 2);
    CHECK(g.equation.order() == 1);
  }

  TEST_CASE("locally reduced") {
    CHECK(locally_reduced(germ("x2^2 - x1^3")));
    CHECK_FALSE(locally_reduced(germ("x1^2*(x2 + 1)")));
    CHECK(locally_reduced(germ("x1*(x2 - 1)^2")));
  }

  TEST_CASE("singular locus is invariant under seeded linear changes") {
    std::mt19937_64 rng(2024);
    const std::vector<PlaneCurve> curves{curve("z*y^2 - x^2*(x + z)"), curve("y*(y*z - x^2)"), cone_curve(4),
                                         tk_curve(4, ThresholdTag::K), ploski_curve(4)};
    for (const auto& c : curves) {
      const auto base = singular_points(c);
      for (int i = 0; i < 4; ++i) {
        const LinearChange t = random_change(rng);
        const PlaneCurve moved(apply_linear_change(c.form(), t));
        const auto locus = singular_points(moved);
        REQUIRE(locus.completeness == Completeness::Complete);
        std::multiset<int> a, b;
        for (const auto& p : base.points) a.insert(p.multiplicity);
        for (const auto& p : locus.points) b.insert(p.multiplicity);
        CHECK(a == b);
        for (const auto& p : base.points)
          CHECK(multiplicity_at(moved, ProjPoint(t.apply_inverse(p.point.coords()))) == p.multiplicity);
      }
    }
  }
}
