#include "support.hpp"

using namespace curvelab;
using namespace curvelab::test;

TEST_SUITE("singularity_classifier") {
  TEST_CASE("Milnor numbers") {
    CHECK(milnor(germ("x2^2 - x1^2")) == 1);
    CHECK(milnor(germ("x2^2 - x1^3")) == 2);
    CHECK(milnor(germ("x1 + x2^3")) == 0);
    CHECK(milnor(ploski_curve(4), pt("0:0:1")) == 7);
    CHECK(milnor(tk_curve(4, ThresholdTag::K), pt("0:0:1")) == 6);
    CHECK(milnor(cone_curve(5), pt("0:0:1")) == 16);
  }

  TEST_CASE("resultant oracle") {
    CHECK(milnor_oracle(germ("x2^2 - x1^3")) == 2);
    CHECK(milnor_oracle(germ("x2^2 - x1^4")) == 3);
    CHECK(milnor_oracle(germ("x1^3 - x1*x2^3")) == 7);
    CHECK(milnor(germ("x1^3 - x1*x2^3")) == 7);
    CHECK(error_of([] { (void)milnor_oracle(germ("x1*x2^2")); }) == ErrorCode::NonIsolatedCriticalPoint);
  }

  TEST_CASE("named types") {
    const SingularityClass cusp = classify(curve("y^2*z - x^3"), pt("0:0:1"));
    CHECK(cusp.tag == SingularityTag::K);
    CHECK(cusp.parameter == 2);
    CHECK(cusp.alias == "A2");
    const SingularityClass tac = classify(curve("y*(y*z - x^2)"), pt("0:0:1"));
    CHECK(tac.tag == SingularityTag::T);
    CHECK(tac.alias == "A3");
    const SingularityClass node = classify(curve("z*y^2 - x^2*(x + z)"), pt("0:0:1"));
    CHECK(node.tag == SingularityTag::A);
    CHECK(node.parameter == 1);
    CHECK(node.alias == "A1");
    CHECK(classify(curve("y*z - x^2"), pt("0:0:1")).tag == SingularityTag::Smooth);
    const SingularityClass cone = classify(cone_curve(3), pt("0:0:1"));
    CHECK(cone.tag == SingularityTag::Cone);
    CHECK(cone.alias == "D4");
  }

  TEST_CASE("quartic aliases") {
    CHECK(classify(tk_curve(4, ThresholdTag::T), pt("0:0:1")).alias == "E7");
    CHECK(classify(tk_curve(4, ThresholdTag::K), pt("0:0:1")).alias == "E6");
    CHECK(classify(tk_curve(4, ThresholdTag::TildeT), pt("0:0:1")).alias == "D6");
    CHECK(classify(tk_curve(4, ThresholdTag::TildeK), pt("0:0:1")).alias == "D5");
    const SingularityClass a7 = classify(ploski_curve(4), pt("0:0:1"));
    CHECK(a7.tag == SingularityTag::PloskiEven);
    CHECK(a7.alias == "A7");
    CHECK(a7.germ_level_reading);
  }

  TEST_CASE("Ploski points") {
    const SingularityClass even = classify(ploski_curve(6), pt("0:0:1"));
    CHECK(even.tag == SingularityTag::PloskiEven);
    CHECK(even.branches == 3);
    const SingularityClass odd = classify(ploski_curve(5), pt("0:0:1"));
    CHECK(odd.tag == SingularityTag::PloskiOdd);
    CHECK(odd.branches == 3);
    CHECK(odd.mu == 14);
  }

  TEST_CASE("Ploski extremality") {
    const PloskiReport six = ploski_extremality_check(ploski_curve(6));
    CHECK(six.max_mu == 22);
    CHECK(six.bound == 22);
    CHECK(six.equality);
    CHECK(six.recognized);
    const PloskiReport seven = ploski_extremality_check(ploski_curve(7));
    CHECK(seven.max_mu == 33);
    CHECK(seven.equality);
    CHECK(seven.recognized);
    const PlaneCurve nodal = curve("x*y*z*(x + y + z)*(x + 2*y + 3*z)");
    for (const auto& p : singular_points(nodal).points) CHECK(p.multiplicity == 2);
    const PloskiReport five = ploski_extremality_check(nodal);
    CHECK(five.max_mu == 1);
    CHECK_FALSE(five.equality);
    CHECK_FALSE(five.recognized);
  }

  TEST_CASE("oracle agrees with the resolution formula on seeded curves") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const PlaneCurve c = random_singular_curve(3 + static_cast<int>(seed % 4), seed);
      const ProjPoint o = pt("0:0:1");
      CHECK(milnor(c, o) == milnor_oracle(c, o));
    }
  }

  TEST_CASE("classification is invariant under seeded linear changes") {
    std::mt19937_64 rng(31337);
    std::vector<PlaneCurve> curves{ploski_curve(4), ploski_curve(5), tk_curve(5, ThresholdTag::TildeT),
                                   cone_curve(4), wall_quintic()};
    for (std::uint64_t seed = 1; seed <= 8; ++seed) curves.push_back(random_singular_curve(5, seed));
    for (const auto& c : curves) {
      const ProjPoint o = pt("0:0:1");
      const SingularityClass base = classify(c, o);
      const Moved mv = move(c, o, random_change(rng));
      const SingularityClass moved = classify(mv.curve, mv.point);
      CHECK(moved.tag == base.tag);
      CHECK(moved.parameter == base.parameter);
      CHECK(moved.mu == base.mu);
      CHECK(moved.type.code == base.type.code);
    }
  }

  TEST_CASE("Milnor number bound (d-1)^2 with equality only for cones") {
    for (int d = 3; d <= 7; ++d) {
      CHECK(milnor(cone_curve(d), pt("0:0:1")) == (d - 1) * (d - 1));
      for (std::uint64_t seed = 1; seed <= 4; ++seed)
        CHECK(milnor(random_singular_curve(d, seed), pt("0:0:1")) < (d - 1) * (d - 1));
    }
  }
}
