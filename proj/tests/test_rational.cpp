#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geomul/errors.hpp"
#include "geomul/random.hpp"
#include "geomul/rational.hpp"
#include "oracle.hpp"

using geomul::ErrorCode;
using geomul::Rational;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const geomul::EngineError& e) {
    return e.code();
  }
  FAIL("no EngineError thrown");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("field operations") {
  CHECK(geomul::multiply(Rational(2), Rational(4)) == Rational(8));
  CHECK(geomul::add(Rational::parse("1/3"), Rational::parse("1/6")) == Rational::parse("1/2"));
  CHECK(geomul::invert(Rational(-4)) == Rational::parse("-1/4"));
  CHECK(geomul::subtract(Rational(1), Rational::parse("1/3")) == Rational::parse("2/3"));
  CHECK(geomul::negate(Rational::parse("5/7")) == Rational::parse("-5/7"));
  CHECK(geomul::compare(Rational(1), Rational(2)) < 0);
  CHECK(geomul::compare(Rational(2), Rational(2)) == 0);
  CHECK(code_of([] { geomul::invert(Rational(0)); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { Rational(geomul::BigInt(1), geomul::BigInt(0)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("canonical text form") {
  CHECK(Rational::parse("4/2").to_string() == "2");
  CHECK(Rational::parse("-6/4").to_string() == "-3/2");
  CHECK(Rational::parse("0/5").to_string() == "0");
  CHECK(Rational(geomul::BigInt(3), geomul::BigInt(-6)).to_string() == "-1/2");
  CHECK(Rational::parse("-0").to_string() == "0");
  Rational big = Rational::parse("123456789012345678901234567891/7");
  CHECK(big.to_string() == "123456789012345678901234567891/7");
  CHECK(big.denominator() == 7);

  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "a", "1/-2", "+3", " 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("denominator stays positive and reduced") {
  geomul::ScalarSampler s(3);
  for (int i = 0; i < 500; ++i) {
    Rational x = s.any(), y = s.nonzero();
    for (const Rational& r : {x + y, x - y, x * y, x / y, -x, y.inverse()}) {
      CHECK(r.denominator() > 0);
      geomul::BigInt g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      CHECK((g == 1 || r.is_zero()));
    }
  }
}

TEST_CASE("arithmetic agrees with the reference fractions") {
  geomul::ScalarSampler s(11);
  for (int i = 0; i < 1000; ++i) {
    Rational x = s.any(), y = s.any();
    CHECK(oracle::same(x * y, oracle::mul(oracle::of(x), oracle::of(y))));
    CHECK(oracle::same(x + y, oracle::add(oracle::of(x), oracle::of(y))));
    CHECK((x < y) == oracle::less(oracle::of(x), oracle::of(y)));
    CHECK(Rational::parse(x.to_string()) == x);
  }
}
