#include "support.hpp"

using namespace curvelab;
using namespace curvelab::test;

namespace {

Rational q(long p, long r = 1) { return Rational(Integer(p), Integer(r)); }

}  // namespace

TEST_SUITE("curve_generators") {
  TEST_CASE("cones") {
    const PlaneCurve c = cone_curve({Rational(0), Rational(1), std::nullopt});
    CHECK(c.degree() == 3);
    CHECK(multiplicity_at(c, pt("0:0:1")) == 3);
    CHECK(c.form() == curve("x*y*(y - x)").form());
    CHECK(lct_at_point(cone_curve(5), pt("0:0:1")).value == q(2, 5));
    CHECK(error_of([] { (void)cone_curve({Rational(1), Rational(1), Rational(2)}); }) == ErrorCode::DuplicateSlope);
    CHECK(error_of([] { (void)cone_curve({std::nullopt, std::nullopt}); }) == ErrorCode::DuplicateSlope);
  }

  TEST_CASE("Ploski curves") {
    const PlaneCurve p4 = ploski_curve(4, {Rational(1), Rational(2)});
    CHECK(classify(p4, pt("0:0:1")).alias == "A7");
    CHECK(lct_at_point(ploski_curve(6), pt("0:0:1")).value == q(5, 12));
    CHECK(milnor(ploski_curve(7), pt("0:0:1")) == 33);
    CHECK(error_of([] { (void)ploski_curve(4, {Rational(1), Rational(1)}); }) == ErrorCode::ParameterClash);
    CHECK(error_of([] { (void)ploski_curve(4, {Rational(0), Rational(1)}); }) == ErrorCode::ParameterClash);
    CHECK(error_of([] { (void)ploski_curve(3); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { (void)ploski_curve(4, {Rational(1)}); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("T/K family") {
    CHECK(tk_curve(5, ThresholdTag::K).form() == curve("x^4*z - y^5").form());
    CHECK(tk_curve(4, ThresholdTag::T).form() == curve("x^3*z - x*y^3").form());
    CHECK(lct_at_point(tk_curve(5, ThresholdTag::K), pt("0:0:1")).value == q(9, 20));
    CHECK(lct_at_point(tk_curve(4, ThresholdTag::T), pt("0:0:1")).value == q(5, 9));
    CHECK(lct_at_point(tk_curve(5, ThresholdTag::TildeT), pt("0:0:1")).value == q(5, 11));
    CHECK(error_of([] { (void)tk_curve(3, ThresholdTag::T); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { (void)tk_curve(4, ThresholdTag::ConeAtPoint); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { (void)tk_curve(4, ThresholdTag::T, {Rational(1)}); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("generated curves pass their advertised classification") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int d = 4; d <= 7; ++d)
      for (ThresholdTag tag : {ThresholdTag::T, ThresholdTag::K, ThresholdTag::TildeT, ThresholdTag::TildeK}) {
        std::vector<Rational> a;
        for (int i = 2; i <= d; ++i) a.emplace_back(coef(rng));
        PlaneCurve c = tk_curve(d, tag);
        try {
          c = tk_curve(d, tag, a);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::NonReducedResult);
        }
        const ThresholdClass t = threshold_class(c, pt("0:0:1"));
        CHECK(t.tag == tag);
        CHECK(t.r == d - 1);
        CHECK(t.computed_lct == threshold_value(tag, d));
      }
    for (int d = 3; d <= 7; ++d) CHECK(classify(cone_curve(d), pt("0:0:1")).tag == SingularityTag::Cone);
    for (int d = 4; d <= 8; ++d) {
      const SingularityClass k = classify(ploski_curve(d), pt("0:0:1"));
      CHECK(k.tag == (d % 2 == 0 ? SingularityTag::PloskiEven : SingularityTag::PloskiOdd));
    }
  }

  TEST_CASE("named examples") {
    const NamedExample w = named_example("wall_quintic");
    REQUIRE(w.curve.has_value());
    CHECK(w.curve->degree() == 5);
    const SingularityClass k = classify(*w.curve, pt("0:0:1"));
    CHECK(k.alias == "A12");
    CHECK(k.branches == 1);
    const NamedExample s = named_example("quartic_surface_a1");
    REQUIRE(s.surface.has_value());
    CHECK(s.surface->form == SurfaceForm::parse("w^3*x + w^2*y*z + x*y*z*(y + z)").form);
    CHECK(error_of([] { (void)named_example("nope"); }) == ErrorCode::UnknownName);
    CHECK(named_example_names().size() == 2);
  }

  TEST_CASE("random curves") {
    CHECK(random_reduced_curve(4, 1).form().str() == random_reduced_curve(4, 1).form().str());
    CHECK_FALSE(random_reduced_curve(4, 1).form() == random_reduced_curve(4, 2).form());
    int smooth = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto locus = singular_points(random_reduced_curve(4, seed));
      if (locus.points.empty() && locus.completeness == Completeness::Complete) ++smooth;
    }
    CHECK(smooth == 20);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const int d = 3 + static_cast<int>(seed % 4);
      const PlaneCurve c = random_singular_curve(d, seed);
      const int m = multiplicity_at(c, pt("0:0:1"));
      CHECK(m >= 2);
      CHECK(m < d);
      CHECK(c.is_reduced());
    }
    CHECK(error_of([] { (void)random_reduced_curve(2, 1); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("generator dispatch") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::PloskiEven;
    spec.degree = 6;
    CHECK(generate(spec).curve->degree() == 6);
    spec.kind = GeneratorKind::PloskiOdd;
    CHECK(error_of([&] { (void)generate(spec); }) == ErrorCode::InvalidArgument);
    spec.kind = GeneratorKind::KuwataGerm;
    spec.params = {Rational(1), Rational(0), Rational(1), Rational(2), Rational(3)};
    const Generated g = generate(spec);
    REQUIRE(g.germ.has_value());
    CHECK(*g.germ == kuwata_germ(1, 0, 1, 2, 3));
    spec.kind = GeneratorKind::ExampleQuarticSurface;
    CHECK(generate(spec).surface.has_value());
    spec.kind = GeneratorKind::Random;
    spec.degree = 5;
    spec.seed = 9;
    spec.singular = true;
    CHECK(multiplicity_at(*generate(spec).curve, pt("0:0:1")) >= 2);
  }
}
