#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geomul/errors.hpp"
#include "geomul/random.hpp"
#include "geomul/segment_arithmetic.hpp"
#include "oracle.hpp"

using namespace geomul;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const EngineError& e) {
    return e.code();
  }
  FAIL("no EngineError thrown");
  return ErrorCode::InternalInconsistency;
}

std::size_t count_kind(const ConstructionTrace& t, StepKind k) {
  std::size_t n = 0;
  for (const auto& s : t.steps) n += s.kind == k;
  return n;
}

}  // namespace

TEST_CASE("geom_mul worked examples") {
  CHECK(geom_mul(2, 4) == 8);
  CHECK(geom_mul(-2, -4) == 8);
  CHECK(geom_mul(2, -4) == -8);
  CHECK(geom_mul(-2, 4) == -8);
  CHECK(geom_mul(q("1/2"), q("1/3")) == q("1/6"));
  CHECK(geom_mul(0, 5) == 0);
  CHECK(geom_mul(5, 0) == 0);
  CHECK(geom_mul(0, 0) == 0);
  ScalarSampler s(1);
  for (int i = 0; i < 50; ++i) {
    Rational a = s.any();
    CHECK(geom_mul(a, 1) == a);
  }
}

TEST_CASE("geom_mul agrees with the reference product") {
  ScalarSampler s(2024);
  for (int i = 0; i < 2000; ++i) {
    Rational a = s.any(), b = s.any();
    CHECK(oracle::same(geom_mul(a, b), oracle::mul(oracle::of(a), oracle::of(b))));
  }
}

TEST_CASE("geom_inverse") {
  CHECK(geom_inverse(1) == 1);
  CHECK(geom_inverse(2) == q("1/2"));
  CHECK(geom_inverse(-4) == q("-1/4"));
  CHECK(code_of([] { geom_inverse(0); }) == ErrorCode::ZeroHasNoInverse);
  ScalarSampler s(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = s.nonzero();
    CHECK(oracle::same(geom_inverse(a), oracle::reciprocal(oracle::of(a))));
  }
  TracedValue t = geom_inverse_traced(3);
  CHECK(count_kind(t.trace, StepKind::draw_parallel) == 1);
  CHECK(replay(t.trace));
}

TEST_CASE("repeated addition") {
  TheoremReport r = check_repeated_addition(2, 4);
  CHECK(r.passed());
  CHECK(r.values == std::vector<Rational>{8, 8});
  CHECK(count_kind(r.trace, StepKind::assert_congruent) == 2);
  CHECK(check_repeated_addition(1, q("-5/3")).passed());
  TheoremReport seven = check_repeated_addition(7, q("-3/5"));
  CHECK(seven.passed());
  CHECK(seven.values.at(1) == q("-21/5"));
  CHECK(code_of([] { check_repeated_addition(q("3/2"), 1); }) == ErrorCode::NotAWholeNumber);
  CHECK(code_of([] { check_repeated_addition(0, 1); }) == ErrorCode::NotAWholeNumber);
}

TEST_CASE("sign rules") {
  TheoremReport r = check_sign_rules(2, 4);
  CHECK(r.passed());
  CHECK(r.values == std::vector<Rational>{8, -8, -8, 8});
  CHECK(check_sign_rules(1, 1).values == std::vector<Rational>{1, -1, -1, 1});
  CHECK(check_sign_rules(q("3/2"), q("5/7")).values ==
        std::vector<Rational>{q("15/14"), q("-15/14"), q("-15/14"), q("15/14")});
  CHECK(count_kind(r.trace, StepKind::assert_parallel) >= 1);
  CHECK(code_of([] { check_sign_rules(-1, 2); }) == ErrorCode::NonPositiveInput);
}

TEST_CASE("shrinkage") {
  CHECK(check_shrinkage(q("1/2"), 10).values.at(0) == 5);
  CHECK(check_shrinkage(q("1/2"), 10).passed());
  CHECK(check_shrinkage(q("9999/10000"), 1).passed());
  CHECK(check_shrinkage(q("1/3"), q("1/3")).values.at(0) == q("1/9"));
  CHECK(code_of([] { check_shrinkage(1, 2); }) == ErrorCode::InputOutOfRange);
  CHECK(code_of([] { check_shrinkage(q("1/2"), 0); }) == ErrorCode::InputOutOfRange);
}

TEST_CASE("inverse report") {
  TheoremReport r = check_inverse(q("-7/3"));
  CHECK(r.passed());
  CHECK(r.values == std::vector<Rational>{q("-3/7"), 1});
}

TEST_CASE("same-base triangles") {
  TheoremReport eq = check_euclid_I37({0, 0}, {5, 0}, {1, 3}, {4, 3});
  CHECK(eq.passed());
  CHECK(eq.values == std::vector<Rational>{15, 15});
  TheoremReport ne = check_euclid_I37({0, 0}, {5, 0}, {1, 3}, {4, 2});
  CHECK(ne.passed());
  CHECK(ne.values == std::vector<Rational>{15, 10});
  // Shear and translate the first configuration.
  auto f = [](const Point& p) { return Point{p.x + 2 * p.y + 7, p.y - 3}; };
  CHECK(check_euclid_I37(f({0, 0}), f({5, 0}), f({1, 3}), f({4, 3})).passed());
  CHECK(code_of([] { check_euclid_I37({0, 0}, {0, 0}, {1, 3}, {4, 3}); }) ==
        ErrorCode::DegenerateConfiguration);
  CHECK(code_of([] { check_euclid_I37({0, 0}, {5, 0}, {1, 0}, {4, 3}); }) ==
        ErrorCode::DegenerateConfiguration);
}

TEST_CASE("equal areas and cross parallels") {
  TheoremReport r = check_theorem5(2, 4, 1, 8);
  CHECK(r.passed());
  CHECK(r.values.at(0) == r.values.at(1));
  TheoremReport s = check_theorem5(2, 4, 1, 7);
  CHECK(s.passed());
  CHECK(s.values.at(0) != s.values.at(1));
  CHECK(check_theorem5(2, 4, 2, 4).passed());
  CHECK(code_of([] { check_theorem5(2, 4, 0, 7); }) == ErrorCode::NonPositiveInput);
}

TEST_CASE("area labels") {
  CHECK(area_label(RightTriangle(2, 4)) == 8);
  CHECK(area_label(RightTriangle(1, q("5/3"))) == q("5/3"));
  CHECK(area_label(RightTriangle(q("3/2"), q("4/3"))) == 2);
  CHECK(check_area_label(RightTriangle(2, 4)).passed());
  CHECK(code_of([] { RightTriangle(0, 4); }) == ErrorCode::NonPositiveInput);
  CHECK(check_theorem6(2, 4, 1, 8).passed());
  CHECK(check_theorem6(2, 4, 2, 4).passed());
  TheoremReport r = check_theorem6(2, 4, 3, 3);
  CHECK(r.passed());
  CHECK(r.values == std::vector<Rational>{8, 9});
}

TEST_CASE("field laws") {
  CHECK(check_commutativity(2, 4).values == std::vector<Rational>{8, 8});
  CHECK(check_commutativity(0, q("5/9")).values == std::vector<Rational>{0, 0});
  CHECK(check_commutativity(q("-3/7"), q("5/2")).values == std::vector<Rational>{q("-15/14"), q("-15/14")});

  TheoremReport a = check_associativity(2, 3, 4);
  CHECK(a.passed());
  CHECK(a.values == std::vector<Rational>{24, 24});
  CHECK(count_kind(a.trace, StepKind::assert_parallel) >= 1);
  CHECK(check_associativity(1, q("2/9"), -5).passed());
  CHECK(check_associativity(-2, q("3/5"), q("-7/3")).values == std::vector<Rational>{q("14/5"), q("14/5")});

  CHECK(check_distributivity(1, 2, 3).values == std::vector<Rational>{5, 2, 3});
  TheoremReport d = check_distributivity(2, 1, 1);
  CHECK(d.passed());
  CHECK(d.values == std::vector<Rational>{4, 2, 2});
  CHECK(count_kind(d.trace, StepKind::assert_congruent) == 1);
  CHECK(check_distributivity(-2, q("5/3"), q("-1/3")).values ==
        std::vector<Rational>{q("-8/3"), q("-10/3"), q("2/3")});
}

TEST_CASE("fractions") {
  CHECK(frac_mul(1, 2, 1, 3) == q("1/6"));
  CHECK(frac_mul(2, 3, 3, 2) == 1);
  CHECK(frac_mul(5, 4, -8, 15) == q("-2/3"));
  CHECK(code_of([] { frac_mul(1, 0, 1, 3); }) == ErrorCode::ZeroDenominator);
  CHECK(check_frac_mul(5, 4, -8, 15).passed());

  TheoremReport i = check_frac_identities(1, 2, 3, 1, 3);
  CHECK(i.passed());
  CHECK(i.values.at(0) == q("1/2"));
  CHECK(i.values.at(1) == q("1/2"));
  TheoremReport same = check_frac_identities(2, 4, 5, 1, 2);
  CHECK(same.passed());
  CHECK(same.values.at(3) == 4);
  CHECK(same.values.at(4) == 4);
  TheoremReport differ = check_frac_identities(2, 4, 5, 1, 3);
  CHECK(differ.passed());
  CHECK(differ.values.at(3) == 6);
  CHECK(differ.values.at(4) == 4);
  CHECK(code_of([] { check_frac_identities(1, 2, 0, 1, 3); }) == ErrorCode::ZeroDenominator);

  ScalarSampler s(77);
  for (int k = 0; k < 300; ++k) {
    Rational a1 = s.any(), b1 = s.nonzero(), a2 = s.any(), b2 = s.nonzero();
    oracle::Frac want = oracle::mul(oracle::mul(oracle::of(a1), oracle::reciprocal(oracle::of(b1))),
                                    oracle::mul(oracle::of(a2), oracle::reciprocal(oracle::of(b2))));
    CHECK(oracle::same(frac_mul(a1, b1, a2, b2), want));
  }
}

TEST_CASE("every report trace replays") {
  for (const TheoremReport& r :
       {check_definition1(3, q("-2/5")), check_repeated_addition(3, 2), check_sign_rules(2, 3),
        check_inverse(5), check_theorem5(2, 4, 1, 8), check_associativity(2, 3, 4),
        check_distributivity(2, 3, 5), check_frac_mul(1, 2, 3, 4)}) {
    CAPTURE(r.theorem_id);
    CHECK(r.passed());
    CHECK(replay(r.trace));
    if (r.theorem_id != "theorem5") CHECK(count_kind(r.trace, StepKind::read_x_intercept) >= 1);
  }
}
