#include "doctest.h"
#include "spinindex/error.hpp"
#include "spinindex/golden.hpp"
#include "spinindex/serialize.hpp"

using namespace spinindex;

TEST_SUITE("exactfield") {
  TEST_CASE("tau satisfies its minimal polynomial") {
    const GoldenNumber t = GoldenNumber::tau();
    CHECK(t * t == t + 1);
    CHECK(t.inverse() == t - 1);
    CHECK(t.galois() == GoldenNumber(1) - t);
    CHECK(GoldenNumber::sqrt5() == 2 * t - 1);
  }

  TEST_CASE("exact sign and ordering") {
    CHECK(GoldenNumber(BigRational(-1), BigRational(2)).sign() == 1);  // sqrt5
    CHECK(GoldenNumber(BigRational(5), BigRational(-3)).sign() == 1);  // 5 - 3 tau = 0.146
    CHECK(GoldenNumber(BigRational(-5), BigRational(3)).sign() == -1);
    CHECK(GoldenNumber(BigRational(8), BigRational(-5)).sign() == -1);  // 8 - 5 tau = -0.09
    CHECK(GoldenNumber::rational(1, 2) < GoldenNumber::tau() - GoldenNumber::rational(1, 10));
  }

  TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS((void)GoldenNumber().inverse(), DivisionByZero);
    CHECK_THROWS_AS((void)(GoldenNumber(1) / GoldenNumber()), DivisionByZero);
  }

  TEST_CASE("parsing") {
    CHECK(GoldenNumber::parse("1/2+3/4*t") == GoldenNumber(make_rational(1, 2), make_rational(3, 4)));
    CHECK(GoldenNumber::parse("-t") == -GoldenNumber::tau());
    CHECK(GoldenNumber::parse("7") == GoldenNumber(7));
    CHECK_THROWS_AS((void)GoldenNumber::parse("1+x"), ParseError);
    const GoldenNumber x(make_rational(-3, 7), make_rational(5, 2));
    CHECK(GoldenNumber::parse(x.to_compact()) == x);
    CHECK(GoldenNumber::parse(x.to_string()) == x);
  }

  TEST_CASE("complex arithmetic over Q(tau)") {
    const GoldenComplex z(GoldenNumber::tau(), 1);
    CHECK(z * z.conj() == GoldenComplex(z.abs2()));
    CHECK(z * z.inverse() == GoldenComplex(1));
    CHECK(GoldenComplex::i() * GoldenComplex::i() == GoldenComplex(-1));
  }

  TEST_CASE("quadratic extension by kappa") {
    const GoldenNumber d(1, 3);
    const QuadExtNumber kappa = QuadExtNumber::root(d);
    CHECK(kappa * kappa == QuadExtNumber(d));
    CHECK(kappa.sign() == 1);
    CHECK((-kappa).sign() == -1);
    CHECK(kappa.to_double() == doctest::Approx(std::sqrt(1 + 3 * 1.6180339887498949)));
    const QuadExtNumber x(GoldenNumber(2), GoldenNumber(-1), d);
    CHECK(x * x.inverse() == QuadExtNumber(1));
    // base-field values combine with any tower
    CHECK(QuadExtNumber(GoldenNumber(3)) * kappa == QuadExtNumber(0, 3, d));
    CHECK_THROWS_AS((void)(kappa + QuadExtNumber::root(GoldenNumber(2))), TowerMismatch);
  }

  TEST_CASE("json round trip") {
    const GoldenNumber x(make_rational(2, 3), make_rational(-1, 5));
    CHECK(golden_from_json(to_json(x)) == x);
    const GoldenComplex z(x, GoldenNumber::tau());
    CHECK(golden_complex_from_json(to_json(z)) == z);
    const QuadExtNumber q(x, GoldenNumber(1), GoldenNumber(1, 3));
    CHECK(quadext_from_json(to_json(q)) == q);
    CHECK_THROWS_AS((void)rational_from_json(Json::parse("[1, 0]")), DivisionByZero);
    CHECK_THROWS_AS((void)golden_from_json(Json::parse("[1]")), ParseError);
  }
}
