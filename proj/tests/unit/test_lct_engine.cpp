#include "support.hpp"

using namespace curvelab;
using namespace curvelab::test;

namespace {

Rational q(long p, long r = 1) { return Rational(Integer(p), Integer(r)); }

Rational germ_lct(const std::string& text) { return lct_from_resolution(resolve(germ(text))).value; }

const std::vector<ThresholdTag> kFamilies{ThresholdTag::T, ThresholdTag::K, ThresholdTag::TildeT, ThresholdTag::TildeK};

}  // namespace

TEST_SUITE("lct_engine") {
  TEST_CASE("lct from resolutions") {
    CHECK(germ_lct("x2^2 - x1^2") == 1);
    CHECK(germ_lct("x2^2 - x1^3") == q(5, 6));
    CHECK(germ_lct("x2^2 - x1^4") == q(3, 4));
    const LctReport r = lct_from_resolution(resolve(germ("x2^2 - x1^3")));
    REQUIRE(r.witness_divisor.has_value());
    CHECK(r.witness_divisor == 2);
    CHECK_FALSE(lct_from_resolution(resolve(germ("x2^2 - x1^2"))).witness_divisor.has_value());
    EngineOptions tight;
    tight.max_extension_degree = 1;
    const ResolutionTree partial = resolve(germ("(x2^2 + x1^2)^2 + x1^5"), tight);
    CHECK(error_of([&] { (void)lct_from_resolution(partial); }) == ErrorCode::Unresolved);
  }

  TEST_CASE("lct at points") {
    CHECK(lct_at_point(tk_curve(4, ThresholdTag::K), pt("0:0:1")).value == q(7, 12));
    CHECK(lct_at_point(tk_curve(4, ThresholdTag::T), pt("0:0:1")).value == q(5, 9));
    CHECK(lct_at_point(wall_quintic(), pt("0:0:1")).value == q(15, 26));
    const LctReport smooth = lct_at_point(curve("y*z - x^2"), pt("0:0:1"));
    CHECK(smooth.value == 1);
    CHECK_FALSE(smooth.witness_divisor.has_value());
  }

  TEST_CASE("global lct") {
    const GlobalLct smooth = lct_global(curve("x^4 + y^4 + z^4"));
    CHECK(smooth.value == 1);
    CHECK_FALSE(smooth.witness.has_value());
    CHECK_FALSE(smooth.partial);
    const GlobalLct lines = lct_global(cone_curve(5));
    CHECK(lines.value == q(2, 5));
    REQUIRE(lines.witness.has_value());
    CHECK(*lines.witness == pt("0:0:1"));
    CHECK(lct_global(ploski_curve(6)).value == q(5, 12));
    EngineOptions tight;
    tight.max_extension_degree = 1;
    CHECK(lct_global(curve("(x^2 - 2*z^2)*(y^2 - 3*z^2)"), tight).partial);
  }

  TEST_CASE("closed form for monomial times binomial") {
    CHECK(kuwata_lct(0, 0, 1, 2, 3) == q(5, 6));
    CHECK(kuwata_lct(1, 0, 1, 2, 3) == q(5, 9));
    CHECK(kuwata_lct(0, 1, 1, 2, 3) == q(5, 8));
    CHECK(kuwata_lct(0, 0, 1, 1, 4) == 1);
    CHECK(error_of([] { (void)kuwata_lct(2, 0, 1, 2, 3); }) == ErrorCode::NonReducedModel);
    CHECK(error_of([] { (void)kuwata_lct(0, 0, 0, 2, 3); }) == ErrorCode::NonReducedModel);
    CHECK(error_of([] { (void)kuwata_lct(0, 0, 1, 0, 3); }) == ErrorCode::NonReducedModel);
  }

  TEST_CASE("closed form matches resolution on seeded tuples") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> n(0, 1), k(0, 3), m(1, 4);
    int checked = 0;
    while (checked < 60) {
      const int n1 = n(rng), n2 = n(rng), kk = k(rng), m1 = m(rng), m2 = m(rng);
      if (kk == 0 && n1 + n2 == 0) continue;
      const MPoly g = kuwata_germ(n1, n2, kk, m1, m2);
      CHECK_MESSAGE(lct_of_germ(make_germ(g)).value == kuwata_lct(n1, n2, kk, m1, m2),
                    n1 << n2 << kk << m1 << m2);
      ++checked;
    }
  }

  TEST_CASE("threshold classes") {
    const ThresholdClass t4 = threshold_class(curve("x^4*z - x*y^4"), pt("0:0:1"));
    CHECK(t4.tag == ThresholdTag::T);
    CHECK(t4.r == 4);
    CHECK(t4.predicted_lct == q(7, 16));
    CHECK(t4.consistent);
    const ThresholdClass k4 = threshold_class(curve("x^4*z - y^5"), pt("0:0:1"));
    CHECK(k4.tag == ThresholdTag::K);
    CHECK(k4.predicted_lct == q(9, 20));
    CHECK(k4.computed_lct == q(9, 20));
    const ThresholdClass pq = threshold_class(ploski_curve(4), pt("0:0:1"));
    CHECK(pq.tag == ThresholdTag::PloskiQuartic);
    CHECK(pq.predicted_lct == q(5, 8));
    CHECK(pq.consistent);
    const ThresholdClass cone = threshold_class(cone_curve(5), pt("0:0:1"));
    CHECK(cone.tag == ThresholdTag::ConeAtPoint);
    CHECK(cone.computed_lct == q(2, 5));
    const ThresholdClass mild = threshold_class(curve("y^2*z^3 - x^5"), pt("0:0:1"));
    CHECK(mild.tag == ThresholdTag::AboveFifthThreshold);
    CHECK(mild.consistent);
  }

  TEST_CASE("normal forms realize the table values for d = 4..9") {
    for (int d = 4; d <= 9; ++d)
      for (ThresholdTag tag : kFamilies) {
        const Rational v = lct_of_germ(make_germ(normal_form_germ(tag, d - 1))).value;
        CHECK_MESSAGE(v == threshold_value(tag, d), threshold_tag_name(tag) << " d=" << d);
        const ThresholdClass c = threshold_class(make_germ(normal_form_germ(tag, d - 1)), d);
        CHECK(c.tag == tag);
        CHECK(c.consistent);
      }
  }

  TEST_CASE("strict ordering of the five smallest thresholds") {
    for (int d = 4; d <= 40; ++d) {
      const std::vector<ThresholdTag> order{ThresholdTag::ConeAtPoint, ThresholdTag::T, ThresholdTag::K,
                                            ThresholdTag::TildeT, ThresholdTag::TildeK};
      for (std::size_t i = 0; i + 1 < order.size(); ++i)
        CHECK(threshold_value(order[i], d) < threshold_value(order[i + 1], d));
    }
    CHECK(threshold_value(ThresholdTag::PloskiQuartic, 4) == threshold_value(ThresholdTag::TildeK, 4));
  }

  TEST_CASE("multiplicity bounds and invariance under seeded linear changes") {
    std::mt19937_64 rng(5150);
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const int d = 3 + static_cast<int>(seed % 4);
      const PlaneCurve c = random_singular_curve(d, seed);
      const ProjPoint o = pt("0:0:1");
      const int m = multiplicity_at(c, o);
      const Rational v = lct_at_point(c, o).value;
      CHECK(Rational(Integer(1), Integer(m)) <= v);
      CHECK(v <= std::min(Rational(1), Rational(Integer(2), Integer(m))));
      const LctReport r = lct_at_point(c, o);
      if (r.witness_divisor) {
        const ResolutionTree t = resolve(localize(c, o));
        const auto& w = t.divisors[*r.witness_divisor];
        CHECK(Rational(Integer(1 + w.a), Integer(w.m)) == v);
      }
      const Moved mv = move(c, o, random_change(rng));
      CHECK(lct_at_point(mv.curve, mv.point).value == v);
    }
  }
}
