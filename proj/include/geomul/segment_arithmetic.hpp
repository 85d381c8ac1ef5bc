#pragma once

/**
 * @file segment_arithmetic.hpp
 * @brief Field operations defined by straightedge-and-parallel constructions,
 * plus witness-producing checkers for the statements built on them.
 *
 * The product ab is the x-intercept of the line through (0, a) parallel to
 * the unit hypotenuse from (0, 1) to (b, 0). Nothing in this module computes
 * a product or reciprocal with scalar arithmetic on the construction path;
 * scalar arithmetic only appears as the oracle side of a checker.
 */

#include <string>
#include <vector>

#include "geomul/plane.hpp"
#include "geomul/rational.hpp"
#include "geomul/trace.hpp"

namespace geomul {

/// Step ids of one multiplication construction inside a larger trace.
struct ProductSteps {
  StepRef shadow;      // (b, 0)
  StepRef top;         // (0, a)
  StepRef unit;        // (0, 1)
  StepRef hypotenuse;  // line through (0, 1) and (b, 0)
  StepRef parallel;    // line through (0, a) parallel to the hypotenuse
  StepRef intercept;   // x-intercept of `parallel`, the product
};

/// Step ids of one inverse construction.
struct InverseSteps {
  StepRef unit_shadow;  // (1, 0)
  StepRef top;          // (0, a)
  StepRef unit;         // (0, 1)
  StepRef reference;    // line through (0, a) and (1, 0)
  StepRef parallel;     // line through (0, 1) parallel to `reference`
  StepRef intercept;    // the inverse
};

struct TracedValue {
  Rational value;
  ConstructionTrace trace;
};

ProductSteps geom_mul(Construction& c, const Rational& a, const Rational& b);
Rational geom_mul(const Rational& a, const Rational& b);
TracedValue geom_mul_traced(const Rational& a, const Rational& b);

/// Throws EngineError(ZeroHasNoInverse) for a == 0.
InverseSteps geom_inverse(Construction& c, const Rational& a);
Rational geom_inverse(const Rational& a);
TracedValue geom_inverse_traced(const Rational& a);

enum class Verdict { pass, fail };

/// Result of a theorem check. `verdict` is pass iff every assertion step in
/// `trace` holds. `values` are the quantities the check computed, in the
/// order documented on each checker.
struct TheoremReport {
  std::string theorem_id;
  std::vector<std::string> inputs;
  std::vector<Rational> values;
  ConstructionTrace trace;
  Verdict verdict = Verdict::fail;
  std::string detail;

  bool passed() const { return verdict == Verdict::pass; }
};

/// Right triangle with legs on the axes, {(0,0), (0,a), (b,0)}.
class RightTriangle {
 public:
  /// Throws EngineError(NonPositiveInput) unless both legs are positive.
  RightTriangle(Rational leg_a, Rational leg_b);

  const Rational& leg_a() const { return leg_a_; }
  const Rational& leg_b() const { return leg_b_; }
  Triangle triangle() const;

 private:
  Rational leg_a_;
  Rational leg_b_;
};

/// geom_mul against the oracle product. values: {ab}.
TheoremReport check_definition1(const Rational& a, const Rational& b);

/// a a positive integer: ab equals the a-fold sum of b, and each unit slice
/// of the product triangle is congruent to {(0,0),(0,1),(b,0)}.
/// values: {ab, sum}. Throws NotAWholeNumber.
TheoremReport check_repeated_addition(const Rational& a, const Rational& b);

/// a, b > 0. values: {ab, a(-b), (-a)b, (-a)(-b)}. Throws NonPositiveInput.
TheoremReport check_sign_rules(const Rational& a, const Rational& b);

/// 0 < a < 1, b > 0: ab < b. values: {ab}. Throws InputOutOfRange.
TheoremReport check_shrinkage(const Rational& a, const Rational& b);

/// a != 0: a * geom_inverse(a) == 1 and the constructed inverse equals the
/// oracle reciprocal. values: {1/a, a(1/a)}. Throws ZeroHasNoInverse.
TheoremReport check_inverse(const Rational& a);

/// Triangles ABC and ABC1 on the same side of AB have equal area iff
/// CC1 is parallel to AB. values: {2|ABC|, 2|ABC1|}.
/// Throws DegenerateConfiguration.
TheoremReport check_euclid_I37(const Point& a, const Point& b, const Point& c, const Point& c1);

/// Right triangles {(0,0),(0,a),(b,0)} and {(0,0),(0,a1),(b1,0)} have equal
/// area iff the cross lines (0,a)-(b1,0) and (0,a1)-(b,0) are parallel.
/// values: {2|T_ab|, 2|T_a1b1|}. Throws NonPositiveInput.
TheoremReport check_theorem5(const Rational& a, const Rational& b, const Rational& a1,
                             const Rational& b1);

/// The unit-leg representative of the area class of t: the other leg is
/// geom_mul(leg_a, leg_b). Throws InternalInconsistency if the representative
/// does not have the same area.
Rational area_label(const RightTriangle& t);
/// values: {label}.
TheoremReport check_area_label(const RightTriangle& t);

/// A(T_ab) == A(T_a1b1) iff ab == a1b1. values: {ab, a1b1}.
TheoremReport check_theorem6(const Rational& a, const Rational& b, const Rational& a1,
                             const Rational& b1);

/// values: {ab, ba}.
TheoremReport check_commutativity(const Rational& a, const Rational& b);

/// a(bc) == (ab)c and a(cb) == c(ab); for positive inputs also the parallel
/// witness (0,c)-(cb,0) || (0,a)-(ab,0). values: {a(bc), (ab)c}.
TheoremReport check_associativity(const Rational& a, const Rational& b, const Rational& c);

/// (b+c)a == ba + ca; for positive inputs also the congruence of
/// {(0,0),(0,c),(ca,0)} with {(ba,0),(ba,c),((b+c)a,0)}.
/// values: {(b+c)a, ba, ca}.
TheoremReport check_distributivity(const Rational& a, const Rational& b, const Rational& c);

/// (a1/b1)(a2/b2) through geometric inverses and products, checked against
/// (a1 a2)/(b1 b2). Throws ZeroDenominator, or InternalInconsistency when the
/// two geometric routes disagree.
Rational frac_mul(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2);
/// Records both routes into `c` (their agreement as an assertion step) and
/// returns the step holding the product. Throws ZeroDenominator.
StepRef frac_mul(Construction& c, const Rational& a1, const Rational& b1, const Rational& a2,
                 const Rational& b2);
/// values: {(a1/b1)(a2/b2), (a1 a2)/(b1 b2)}.
TheoremReport check_frac_mul(const Rational& a1, const Rational& b1, const Rational& a2,
                             const Rational& b2);

/// a/b == (ak)/(bk), and a/b == a2/b2 iff a b2 == a2 b.
/// values: {a/b, (ak)/(bk), a2/b2, a b2, a2 b}. Throws ZeroDenominator.
TheoremReport check_frac_identities(const Rational& a, const Rational& b, const Rational& k,
                                    const Rational& a2, const Rational& b2);

/// Builds a report from a finished construction; verdict from its assertions.
TheoremReport make_report(std::string theorem_id, Construction&& construction,
                          std::vector<Rational> values, std::string detail);

}  // namespace geomul
