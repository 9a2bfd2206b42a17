#include "support.hpp"

using namespace curvelab;
using namespace curvelab::test;

namespace {

Rational q(long p, long r = 1) { return Rational(Integer(p), Integer(r)); }

StabilityStatus status_of(const PlaneCurve& c) { return stability(c).status; }

}  // namespace

TEST_SUITE("git_stability") {
  TEST_CASE("weights") {
    CHECK(weight(germ_poly("1 + x1*x2"), {2, 1}) == 0);
    CHECK(weight(germ_poly("x1^2 - x2^3"), {2, 1}) == 3);
    CHECK(weight(germ_poly("x1^2 - x2^3"), {3, 2}) == 6);
    CHECK(weight(germ_poly("x1^3 - x2^4"), {2, 1}) == 4);
    CHECK(weight(germ_poly("x1^3 - x2^4"), {3, 2}) == 8);
    CHECK(weight_excess(germ_poly("x1^2 - x2^3"), {3, 2}, 3) == 1);
    CHECK(error_of([] { (void)weight(MPoly(germ_vars()), {1, 1}); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("weight (1,1) is the multiplicity") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const PlaneCurve c = random_singular_curve(4 + static_cast<int>(seed % 3), seed);
      const CurveGerm g = localize(c, pt("0:0:1"));
      CHECK(weight(g.equation, {1, 1}) == g.equation.order());
    }
  }

  TEST_CASE("candidate weights") {
    const auto cusp = candidate_weights(germ_poly("x2^2 - x1^3"));
    CHECK(cusp == std::vector<WeightVector>{{0, 1}, {1, 0}, {1, 1}, {2, 3}});
    const MPoly homog = germ_poly("x1^3 - x1*x2^2 + x2^3");
    const auto hw = candidate_weights(homog);
    CHECK(std::find(hw.begin(), hw.end(), WeightVector{1, 1}) != hw.end());
    Rational best = weight_excess(homog, {1, 1}, 3);
    for (const auto& w : hw) CHECK(weight_excess(homog, w, 3) <= best);
    const MPoly dense = germ_poly("1 + x1 + x2 + x1^2*x2");
    for (const auto& w : candidate_weights(dense)) CHECK(weight_excess(dense, w, 3) < 0);
  }

  TEST_CASE("flags") {
    CHECK(enumerate_flags(cone_curve(4)).flags.size() == 4);
    CHECK(enumerate_flags(curve("x^3 + y^3 + z^3")).flags.empty());
    const FlagList p = enumerate_flags(ploski_curve(4));
    REQUIRE(p.flags.size() == 1);
    const Flag& f = p.flags[0];
    CHECK(f.point == pt("0:0:1"));
    CHECK(f.line[0].is_zero());
    CHECK_FALSE(f.line[1].is_zero());
    CHECK(f.line[2].is_zero());
    const MPoly g = flag_germ(ploski_curve(4), f);
    CHECK(g.coeff({0, 0}).is_zero());
  }

  TEST_CASE("verdicts") {
    CHECK(status_of(curve("z*y^2 - x^2*(x + z)")) == StabilityStatus::StrictlySemistable);
    const StabilityVerdict cusp = stability(curve("y^2*z - x^3"));
    CHECK(cusp.status == StabilityStatus::Unstable);
    REQUIRE(cusp.witness.has_value());
    CHECK(cusp.witness->verified);
    CHECK(cusp.witness->excess > 0);
    const StabilityVerdict p4 = stability(ploski_curve(4));
    CHECK(p4.status == StabilityStatus::StrictlySemistable);
    REQUIRE(p4.witness.has_value());
    CHECK(p4.witness->excess == 0);
    CHECK(verify_witness(ploski_curve(4), *p4.witness));
    CHECK(status_of(ploski_curve(5)) == StabilityStatus::Unstable);
    CHECK(status_of(wall_quintic()) == StabilityStatus::NoDestabilizerFound);
    const StabilityVerdict smooth = stability(curve("x^3 + y^3 + z^3"));
    CHECK(smooth.status == StabilityStatus::NoDestabilizerFound);
    CHECK_FALSE(smooth.witness.has_value());
    CHECK(error_of([] { (void)stability(curve("y*z - x^2")); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("inflectional tangent quartic is unstable with lct 2/3") {
    const PlaneCurve c = curve("z*(y^2*z - x^3 - x*z^2)");
    CHECK(lct_global(c).value == q(2, 3));
    const StabilityVerdict v = stability(c);
    CHECK(v.status == StabilityStatus::Unstable);
    CHECK(v.witness->excess == q(2, 3));
  }

  TEST_CASE("high multiplicity points destabilize") {
    for (int d = 3; d <= 7; ++d) {
      const StabilityVerdict v = stability(cone_curve(d));
      CHECK(v.status == StabilityStatus::Unstable);
      CHECK(v.witness->verified);
      CHECK(v.search_space.seeds_agree);
    }
  }

  TEST_CASE("normal-form audit: small thresholds force instability") {
    for (int d = 4; d <= 6; ++d)
      for (ThresholdTag tag : {ThresholdTag::T, ThresholdTag::K, ThresholdTag::TildeT, ThresholdTag::TildeK}) {
        const PlaneCurve c = tk_curve(d, tag);
        const Rational v = lct_global(c).value;
        const StabilityVerdict s = stability(c);
        if (v < Rational(Integer(5), Integer(2 * d))) {
          CHECK(s.status == StabilityStatus::Unstable);
          CHECK(verify_witness(c, *s.witness));
        }
        if (v >= Rational(Integer(3), Integer(d))) CHECK(s.status != StabilityStatus::Unstable);
      }
  }

  TEST_CASE("verdict is invariant under seeded linear changes") {
    std::mt19937_64 rng(4242);
    const std::vector<PlaneCurve> curves{curve("z*y^2 - x^2*(x + z)"), curve("y^2*z - x^3"), ploski_curve(4),
                                         curve("z*(y^2*z - x^3 - x*z^2)")};
    for (const auto& c : curves) {
      const StabilityVerdict base = stability(c);
      for (int i = 0; i < 3; ++i) {
        const PlaneCurve moved(apply_linear_change(c.form(), random_change(rng)));
        const StabilityVerdict v = stability(moved);
        CHECK(v.status == base.status);
        CHECK(v.max_excess == base.max_excess);
      }
    }
  }
}
