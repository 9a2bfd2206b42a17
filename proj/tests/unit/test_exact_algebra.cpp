#include "support.hpp"

using namespace curvelab;
using namespace curvelab::test;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

MPoly p3(const std::string& s) { return parse_polynomial(s, kXYZ); }

QPoly qpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(c);
}

QPoly product(const std::vector<QFactor>& fs) {
  QPoly out = QPoly::constant(1);
  for (const auto& f : fs) out = out * pow(f.factor, f.multiplicity);
  return out;
}

/// t^4 + c t^2 + ... has a monic integer quadratic or linear factor; brute force over small values.
bool quartic_splits_by_search(const QPoly& p) {
  for (long r = -4; r <= 4; ++r)
    if (p.eval(Rational(r)).is_zero()) return true;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      if (b == 0) continue;
      if (divrem(p, qpoly({b, a, 1})).second.is_zero()) return true;
    }
  return false;
}

}  // namespace

TEST_SUITE("exact_algebra") {
  TEST_CASE("rational arithmetic is exact and canonical") {
    const Rational a(Integer(6), Integer(-4));
    CHECK(a.str() == "-3/2");
    CHECK((a + Rational(Integer(1), Integer(2))).str() == "-1");
    CHECK(Rational::parse("10/4") == Rational(Integer(5), Integer(2)));
    CHECK(Rational(Integer(2), Integer(3)).pow(3).str() == "8/27");
    CHECK(error_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorCode::DivisionByZero);
    CHECK(error_of([] { (void)Rational::parse("1/x"); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("parser transcribes terms") {
    const MPoly f = p3("y^2*z - x^3");
    CHECK(f.size() == 2);
    CHECK(f.coeff({0, 2, 1}) == FieldElement(1));
    CHECK(f.coeff({3, 0, 0}) == FieldElement(-1));
    const MPoly w = p3("x^5+(y^2-x*z)^2*(x/4+y+z)-x^2*(y^2-x*z)*(x+2*y)");
    CHECK(w.total_degree() == 5);
    CHECK(w.is_homogeneous());
    CHECK(w.nvars() == 3);
  }

  TEST_CASE("parser errors") {
    try {
      (void)p3("x^2 + ");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position() == 6);
    }
    CHECK(error_of([] { (void)p3("x + q"); }) == ErrorCode::UnknownVariable);
    CHECK(error_of([] { (void)p3("x / (y - y)"); }).has_value());
    CHECK(error_of([] { (void)p3("x/0"); }) == ErrorCode::DivisionByZero);
    CHECK(p3("x − y") == p3("x - y"));
  }

  TEST_CASE("linear changes") {
    const MPoly f = p3("x^3 + 2*x*y*z - z^3");
    CHECK(apply_linear_change(f, LinearChange::identity(3)) == f);
    CHECK(apply_linear_change(p3("x^3"), LinearChange::permutation({1, 0, 2})) == p3("y^3"));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
      const LinearChange t = random_change(rng);
      CHECK(apply_linear_change(apply_linear_change(f, t), t.inverse()) == f);
      CHECK(apply_linear_change(f, t.then(t.inverse())) == f);
    }
    CHECK(error_of([] { LinearChange(Matrix{{1, 2}, {2, 4}}); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("squarefree part") {
    auto r = squarefree_part(p3("x^2*y"));
    CHECK_FALSE(r.is_reduced);
    CHECK(r.squarefree == p3("x*y"));
    r = squarefree_part(p3("y^2*z - x^3"));
    CHECK(r.is_reduced);
    CHECK(r.squarefree == p3("y^2*z - x^3").normalized());
    const MPoly a = p3("y*z - x^2"), b = p3("y*z - x^2 - y^2");
    r = squarefree_part(pow(a, 2) * pow(b, 2));
    CHECK_FALSE(r.is_reduced);
    CHECK(r.squarefree.total_degree() == 4);
    CHECK(r.squarefree == (a * b).normalized());
  }

  TEST_CASE("rational factorization") {
    auto fs = factor_rational(qpoly({-1, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(product(fs) == qpoly({-1, 0, 1}));
    fs = factor_rational(qpoly({1, 0, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].factor == qpoly({1, 0, 1}));
    const QPoly q = qpoly({-2, 0, 0, 0, 1});
    fs = factor_rational(q);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].factor == q);
    CHECK_FALSE(quartic_splits_by_search(q));
    CHECK(quartic_splits_by_search(qpoly({4, 0, 0, 0, 1})));  // Sophie Germain
    CHECK(factor_rational(qpoly({4, 0, 0, 0, 1})).size() == 2);
  }

  TEST_CASE("factorization reconstructs seeded products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int round = 0; round < 30; ++round) {
      QPoly p = QPoly::constant(1);
      int factors = 0;
      for (int k = 0; k < 3; ++k) {
        QPoly f({Rational(coef(rng)), Rational(coef(rng)), Rational(1)});
        p = p * f;
        ++factors;
      }
      const auto fs = factor_rational(p);
      CHECK(product(fs) == p.monic());
      int total = 0;
      for (const auto& f : fs) total += f.multiplicity * f.factor.degree();
      CHECK(total == 2 * factors);
      for (const auto& f : fs) CHECK(f.factor == f.factor.monic());
    }
  }

  TEST_CASE("modular gcd agrees with the Euclidean gcd") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-9, 9);
    auto draw = [&](int deg) {
      std::vector<Rational> c;
      for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
      c.emplace_back(1);
      return QPoly(c);
    };
    for (int i = 0; i < 40; ++i) {
      const QPoly g = draw(2), a = g * draw(3), b = g * draw(4);
      CHECK(detail::modular_gcd(a, b) == gcd(a, b));
      CHECK(divrem(gcd(a, b), g.monic()).second.is_zero());
    }
  }

  TEST_CASE("number field arithmetic") {
    const FieldPtr k = NumberField::make(qpoly({-2, 0, 1}));
    const FieldElement a = FieldElement::generator(k);
    CHECK((a * a) == FieldElement(2));
    CHECK((a * a).is_rational());
    CHECK((a.inverse() * a).is_one());
    CHECK(field_norm(a + FieldElement(1)) == Rational(-1));
    CHECK(error_of([] { (void)NumberField::make(qpoly({-1, 0, 1})); }) == ErrorCode::InvalidArgument);
    const FieldPtr k3 = NumberField::make(qpoly({-3, 0, 1}));
    CHECK(error_of([&] { (void)common_field(k, k3); }) == ErrorCode::ExtensionLimit);
    const auto fs = factor_univariate(UPoly(qpoly({-2, 0, 1})), k);
    CHECK(fs.size() == 2);
  }

  TEST_CASE("resultants") {
    const MPoly f = p3("x^2 - 2*z^2"), g = p3("x - y");
    const MPoly r = resultant(f, g, 0);
    CHECK(r.normalized() == p3("y^2 - 2*z^2").normalized());
    CHECK(resultant(p3("x*y"), p3("x*z"), 0).is_zero());
  }

  TEST_CASE("multivariate gcd") {
    const MPoly a = p3("x + y"), b = p3("x*z - y^2"), c = p3("z^2 + x");
    CHECK(gcd(a * b, b * c) == b.normalized());
    CHECK(gcd(a, c).is_constant());
  }
}
