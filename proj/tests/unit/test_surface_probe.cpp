#include "support.hpp"

using namespace curvelab;
using namespace curvelab::test;

namespace {

Rational q(long p, long r = 1) { return Rational(Integer(p), Integer(r)); }

SurfaceForm surface(const std::string& text) { return SurfaceForm::parse(text); }

const ProjPoint& origin() {
  static const ProjPoint o = pt("0:0:0:1");
  return o;
}

}  // namespace

TEST_SUITE("surface_probe") {
  TEST_CASE("surface forms") {
    CHECK(error_of([] { (void)surface("x^2 + y^2 + z^2 + w^2"); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { (void)surface("x^3 + y"); }) == ErrorCode::InvalidArgument);
    CHECK(surface("x^3 + y^3 + z^3 + w^3").smoothness == Smoothness::Unchecked);
  }

  TEST_CASE("smoothness certificates") {
    SurfaceForm fermat = surface("x^4 + y^4 + z^4 + w^4");
    CHECK(verify_smooth(fermat) == Smoothness::Verified);
    SurfaceForm visible = surface("x^2*y*z + y^4 + z^4 + w^4");
    CHECK(verify_smooth(visible) == Smoothness::Failed);
    REQUIRE(visible.witness.has_value());
    CHECK(*visible.witness == pt("1:0:0:0"));
    SurfaceForm assumed = surface("x^2*y*z + y^4 + z^4 + w^4");
    CHECK(verify_smooth(assumed, true) == Smoothness::Assumed);
    SurfaceForm big = surface("(x + y + z + w)^9 + x^9 + y^9 - z^9 + w^9 + x*y*z*w^6");
    CHECK(error_of([&] { (void)verify_smooth(big); }) == ErrorCode::EliminationTooLarge);
  }

  TEST_CASE("the example quartic surface is singular") {
    SurfaceForm s = quartic_surface_a1();
    CHECK(verify_smooth(s) == Smoothness::Failed);
    REQUIRE(s.witness.has_value());
    for (int i = 0; i < 4; ++i) CHECK(s.form.derivative(i).eval(s.witness->coords()).is_zero());
    CHECK(error_of([&] { (void)alpha_probe(s, origin()); }) == ErrorCode::SingularSurfacePoint);
    SurfaceForm unchecked = quartic_surface_a1();
    CHECK(error_of([&] { (void)alpha_probe(unchecked, origin()); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("tangent section of the quartic example has an A1 point") {
    SurfaceForm s = quartic_surface_a1();
    verify_smooth(s, true);
    const TangentSection t = tangent_section(s, origin());
    CHECK(t.germ.equation.order() == 2);
    CHECK(classify(t.germ, 4).alias == "A1");
    CHECK_FALSE(is_star_point(s, origin()));
    const AlphaProbeReport r = alpha_probe(s, origin());
    CHECK(r.lct == 1);
    CHECK(r.dichotomy == AlphaDichotomy::AlphaLowerBound);
    CHECK(r.value == q(5, 8));
  }

  TEST_CASE("tangent section basis spans the tangent plane") {
    SurfaceForm s = surface("w^3*x + w^2*y*z + y^4 + z^4 + x^4");
    const TangentSection t = tangent_section(s, origin());
    REQUIRE(t.basis.size() == 4);
    std::vector<FieldElement> grad;
    for (int i = 0; i < 4; ++i) grad.push_back(s.form.derivative(i).eval(origin().coords()));
    for (int col = 0; col < 3; ++col) {
      FieldElement dot(0);
      for (int i = 0; i < 4; ++i) dot += grad[i] * t.basis[i][col];
      CHECK(dot.is_zero());
    }
    CHECK(classify(t.germ, 4).alias == "A1");
    CHECK_FALSE(is_star_point(s, origin()));
    CHECK(error_of([&] { (void)tangent_section(s, pt("1:1:1:1")); }) == ErrorCode::PointNotOnCurve);
  }

  TEST_CASE("nodal cubic section") {
    SurfaceForm s = surface("w^2*z + w*x*y + x^3 + y^3 + z^3");
    CHECK(verify_smooth(s) == Smoothness::Verified);
    const AlphaProbeReport r = alpha_probe(s, origin());
    CHECK(r.lct == 1);
    CHECK(classify(r.section.germ, 3).alias == "A1");
  }

  TEST_CASE("star points") {
    for (int d = 4; d <= 5; ++d) {
      SurfaceForm s = star_surface(d);
      CHECK(verify_smooth(s) == Smoothness::Verified);
      CHECK(is_star_point(s, origin()));
      const AlphaProbeReport r = alpha_probe(s, origin());
      CHECK(r.star_point);
      CHECK(r.dichotomy == AlphaDichotomy::AlphaEquals);
      CHECK(r.value == Rational(Integer(2), Integer(d)));
    }
  }

  TEST_CASE("lifted K sections") {
    for (int d = 4; d <= 5; ++d) {
      SurfaceForm s = k_lift_surface(d);
      CHECK(s.smoothness == Smoothness::Verified);
      const AlphaProbeReport r = alpha_probe(s, origin());
      CHECK(r.dichotomy == AlphaDichotomy::AlphaEquals);
      CHECK(r.value == threshold_value(ThresholdTag::K, d));
      REQUIRE(r.threshold.has_value());
      CHECK(r.threshold->tag == ThresholdTag::K);
    }
  }
}
