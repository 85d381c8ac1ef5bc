#include "geomul/segment_arithmetic.hpp"

#include <sstream>

#include "geomul/errors.hpp"

namespace geomul {

namespace {

const Point kOrigin{0, 0};

std::vector<std::string> as_strings(std::initializer_list<Rational> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(v.to_string());
  return out;
}

std::string factor(const Rational& r) {
  return r.sign() < 0 || !r.is_integer() ? "(" + r.to_string() + ")" : r.to_string();
}

std::string join(const std::vector<Rational>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  return os.str();
}

void require_positive(std::initializer_list<Rational> values) {
  for (const Rational& v : values) {
    if (v.sign() <= 0) throw EngineError(ErrorCode::NonPositiveInput, v.to_string() + " is not positive");
  }
}

void require_nonzero_denominator(std::initializer_list<Rational> values) {
  for (const Rational& v : values) {
    if (v.is_zero()) throw EngineError(ErrorCode::ZeroDenominator, "zero denominator");
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ProductSteps geom_mul(Construction& c, const Rational& a, const Rational& b) {
  ProductSteps s;
  s.shadow = c.place_point({b, 0}, b.to_string());
  s.top = c.place_point({0, a}, a.to_string());
  s.unit = c.place_point({0, 1}, "1");
  s.hypotenuse = c.draw_line_through(s.unit, s.shadow, "unit hypotenuse for " + b.to_string());
  s.parallel = c.draw_parallel(s.top, s.hypotenuse);
  s.intercept = c.read_x_intercept(s.parallel, factor(a) + "(" + b.to_string() + ")");
  return s;
}

TracedValue geom_mul_traced(const Rational& a, const Rational& b) {
  Construction c("geom_mul", as_strings({a, b}));
  ProductSteps s = geom_mul(c, a, b);
  Rational value = c.scalar(s.intercept);
  return {std::move(value), std::move(c).take()};
}

Rational geom_mul(const Rational& a, const Rational& b) { return geom_mul_traced(a, b).value; }

InverseSteps geom_inverse(Construction& c, const Rational& a) {
  if (a.is_zero()) throw EngineError(ErrorCode::ZeroHasNoInverse, "0 has no multiplicative inverse");
  InverseSteps s;
  s.unit_shadow = c.place_point({1, 0}, "1");
  s.top = c.place_point({0, a}, a.to_string());
  s.unit = c.place_point({0, 1}, "1");
  s.reference = c.draw_line_through(s.top, s.unit_shadow);
  s.parallel = c.draw_parallel(s.unit, s.reference);
  s.intercept = c.read_x_intercept(s.parallel, "1/" + factor(a));
  return s;
}

TracedValue geom_inverse_traced(const Rational& a) {
  Construction c("geom_inverse", as_strings({a}));
  InverseSteps s = geom_inverse(c, a);
  Rational value = c.scalar(s.intercept);
  return {std::move(value), std::move(c).take()};
}

Rational geom_inverse(const Rational& a) { return geom_inverse_traced(a).value; }

RightTriangle::RightTriangle(Rational leg_a, Rational leg_b)
    : leg_a_(std::move(leg_a)), leg_b_(std::move(leg_b)) {
  require_positive({leg_a_, leg_b_});
}

Triangle RightTriangle::triangle() const { return {kOrigin, {0, leg_a_}, {leg_b_, 0}}; }

TheoremReport make_report(std::string theorem_id, Construction&& construction,
                          std::vector<Rational> values, std::string detail) {
  TheoremReport r;
  r.theorem_id = std::move(theorem_id);
  r.trace = std::move(construction).take();
  r.inputs = r.trace.inputs;
  r.values = std::move(values);
  r.verdict = r.trace.assertions_hold() ? Verdict::pass : Verdict::fail;
  r.detail = std::move(detail);
  return r;
}

TheoremReport check_definition1(const Rational& a, const Rational& b) {
  Construction c("definition1", as_strings({a, b}));
  ProductSteps s = geom_mul(c, a, b);
  const Rational& ab = c.scalar(s.intercept);
  c.assert_equal(s.intercept, a * b, true, "construction matches the oracle product");
  std::string detail = factor(a) + "(" + b.to_string() + ") = " + ab.to_string();
  return make_report("definition1", std::move(c), {ab}, std::move(detail));
}

TheoremReport check_repeated_addition(const Rational& a, const Rational& b) {
  if (!a.is_integer() || a.sign() <= 0) {
    throw EngineError(ErrorCode::NotAWholeNumber, a.to_string() + " is not a positive whole number");
  }
  Construction c("repeated_addition", as_strings({a, b}));
  ProductSteps s = geom_mul(c, a, b);
  Rational ab = c.scalar(s.intercept);

  Rational sum;
  for (Rational i = 1; i <= a; i += 1) sum += b;
  c.assert_equal(s.intercept, sum, true, "product equals the repeated sum");

  // Slice the product triangle at unit heights; slice i has its right angle
  // at ((i-1)b, a-i) and its hypotenuse on the constructed parallel.
  std::size_t slices = 0;
  Rational x;
  for (Rational i = 1; i <= a; i += 1) {
    Point upper{x, a - i + 1};
    Point corner{x, a - i};
    x += b;
    Point lower{x, a - i};
    c.assert_congruent({kOrigin, s.unit, s.shadow, upper, corner, lower}, true,
                       "slice " + i.to_string() + " congruent to the unit triangle");
    StepRef slope = c.draw_line_through(upper, lower);
    c.assert_parallel(slope, s.parallel, true, "slice " + i.to_string() + " on the product line");
    ++slices;
  }
  std::string detail = "sum " + sum.to_string() + ", " + std::to_string(slices) + " congruent triangles";
  return make_report("repeated_addition", std::move(c), {ab, sum}, std::move(detail));
}

TheoremReport check_sign_rules(const Rational& a, const Rational& b) {
  require_positive({a, b});
  Construction c("sign_rules", as_strings({a, b}));
  ProductSteps pp = geom_mul(c, a, b);
  ProductSteps pn = geom_mul(c, a, -b);
  ProductSteps np = geom_mul(c, -a, b);
  ProductSteps nn = geom_mul(c, -a, -b);

  Rational oracle = a * b;
  c.assert_equal(pp.intercept, oracle, true, "a(b) = ab");
  c.assert_equal(pn.intercept, -oracle, true, "a(-b) = -(ab)");
  c.assert_equal(np.intercept, -oracle, true, "(-a)b = -(ab)");
  c.assert_equal(nn.intercept, oracle, true, "(-a)(-b) = ab");
  c.assert_equal(nn.intercept, pp.intercept, true, "(-a)(-b) = a(b)");
  c.assert_equal(pn.intercept, np.intercept, true, "a(-b) = (-a)b");

  // Reflection witness: (b,0)-(0,1) || (C,0)-(0,a) iff (-b,0)-(0,1) || (C,0)-(0,-a).
  Point product{c.scalar(pp.intercept), 0};
  StepRef unit = pp.unit;
  StepRef right_hyp = c.draw_line_through(pp.shadow, unit);
  StepRef right_big = c.draw_line_through(product, pp.top);
  StepRef left_hyp = c.draw_line_through(Point{-b, 0}, unit);
  StepRef left_big = c.draw_line_through(product, Point{0, -a});
  bool right = is_parallel(c.line(right_hyp), c.line(right_big));
  bool left = is_parallel(c.line(left_hyp), c.line(left_big));
  c.assert_parallel(right_hyp, right_big, true, "definition: upper half-plane parallel");
  c.assert_parallel(right_hyp, right_big, left, "upper parallel iff lower parallel");
  c.assert_parallel(left_hyp, left_big, right, "lower parallel iff upper parallel");

  std::vector<Rational> values{c.scalar(pp.intercept), c.scalar(pn.intercept),
                               c.scalar(np.intercept), c.scalar(nn.intercept)};
  std::string detail = "products {" + join(values) + "}";
  return make_report("sign_rules", std::move(c), std::move(values), std::move(detail));
}

TheoremReport check_shrinkage(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || a >= 1 || b.sign() <= 0) {
    throw EngineError(ErrorCode::InputOutOfRange,
                      "need 0 < a < 1 and b > 0, got a=" + a.to_string() + " b=" + b.to_string());
  }
  Construction c("shrinkage", as_strings({a, b}));
  ProductSteps s = geom_mul(c, a, b);
  Rational ab = c.scalar(s.intercept);
  c.assert_less(s.intercept, b, true, "ab < b");
  std::string detail = ab.to_string() + " < " + b.to_string();
  return make_report("shrinkage", std::move(c), {ab}, std::move(detail));
}

TheoremReport check_inverse(const Rational& a) {
  Construction c("inverse", as_strings({a}));
  InverseSteps inv = geom_inverse(c, a);
  Rational b = c.scalar(inv.intercept);
  ProductSteps check = geom_mul(c, a, b);
  c.assert_equal(check.intercept, Rational(1), true, "a(1/a) = 1");
  c.assert_equal(inv.intercept, a.inverse(), true, "constructed inverse is the unique inverse");
  Rational product = c.scalar(check.intercept);
  std::string detail = "1/" + factor(a) + " = " + b.to_string();
  return make_report("inverse", std::move(c), {b, product}, std::move(detail));
}

TheoremReport check_euclid_I37(const Point& a, const Point& b, const Point& c_pt, const Point& c1) {
  if (a == b) throw EngineError(ErrorCode::DegenerateConfiguration, "A and B coincide");
  if (c_pt == c1) throw EngineError(ErrorCode::DegenerateConfiguration, "C and C1 coincide");
  Line base = line_through(a, b);
  Rational side_c = base.evaluate(c_pt);
  Rational side_c1 = base.evaluate(c1);
  if (side_c.is_zero() || side_c1.is_zero()) {
    throw EngineError(ErrorCode::DegenerateConfiguration, "apex lies on line AB");
  }
  if (side_c.sign() != side_c1.sign()) {
    throw EngineError(ErrorCode::DegenerateConfiguration, "C and C1 lie on opposite sides of AB");
  }

  Construction c("euclid_I37", {to_string(a), to_string(b), to_string(c_pt), to_string(c1)});
  StepRef pa = c.place_point(a, "A");
  StepRef pb = c.place_point(b, "B");
  StepRef pc = c.place_point(c_pt, "C");
  StepRef pc1 = c.place_point(c1, "C1");
  StepRef ab = c.draw_line_through(pa, pb, "AB");
  StepRef cc1 = c.draw_line_through(pc, pc1, "CC1");

  Rational area = twice_area({a, b, c_pt});
  Rational area1 = twice_area({a, b, c1});
  bool equal_areas = area == area1;
  bool parallel = is_parallel(c.line(cc1), c.line(ab));
  c.assert_area_equal({pa, pb, pc, pa, pb, pc1}, parallel, "area equality agrees with parallelism");
  c.assert_parallel(cc1, ab, equal_areas, "parallelism agrees with area equality");

  std::string detail = "twice-areas " + area.to_string() + " vs " + area1.to_string() +
                       "; CC1 || AB: " + yes_no(parallel);
  return make_report("euclid_I37", std::move(c), {area, area1}, std::move(detail));
}

TheoremReport check_theorem5(const Rational& a, const Rational& b, const Rational& a1,
                             const Rational& b1) {
  require_positive({a, b, a1, b1});
  Construction c("theorem5", as_strings({a, b, a1, b1}));
  StepRef pa = c.place_point(kOrigin, "A");
  StepRef pb = c.place_point({0, a}, "B");
  StepRef pc = c.place_point({b, 0}, "C");
  StepRef pb1 = c.place_point({0, a1}, "B1");
  StepRef pc1 = c.place_point({b1, 0}, "C1");
  StepRef bc1 = c.draw_line_through(pb, pc1, "BC1");
  StepRef b1c = c.draw_line_through(pb1, pc, "B1C");

  Rational area = twice_area({kOrigin, {0, a}, {b, 0}});
  Rational area1 = twice_area({kOrigin, {0, a1}, {b1, 0}});
  bool equal_areas = area == area1;
  bool parallel = is_parallel(c.line(bc1), c.line(b1c));
  c.assert_area_equal({pa, pb, pc, pa, pb1, pc1}, parallel, "area equality agrees with parallelism");
  c.assert_parallel(bc1, b1c, equal_areas, "parallelism agrees with area equality");

  std::string detail = "twice-areas " + area.to_string() + " vs " + area1.to_string() +
                       "; BC1 || B1C: " + yes_no(parallel);
  return make_report("theorem5", std::move(c), {area, area1}, std::move(detail));
}

namespace {

TheoremReport area_label_report(const RightTriangle& t) {
  Construction c("area_label", as_strings({t.leg_a(), t.leg_b()}));
  ProductSteps s = geom_mul(c, t.leg_a(), t.leg_b());
  Rational label = c.scalar(s.intercept);
  StepRef origin = c.place_point(kOrigin, "0");
  StepRef foot = c.place_point({label, 0}, label.to_string());
  c.assert_area_equal({origin, s.unit, foot, origin, s.top, s.shadow}, true,
                      "unit-leg representative has the same area");
  std::string detail = "T(" + t.leg_a().to_string() + "," + t.leg_b().to_string() + ") ~ T(1," +
                       label.to_string() + "), twice-area " + label.to_string();
  return make_report("area_label", std::move(c), {label}, std::move(detail));
}

}  // namespace

Rational area_label(const RightTriangle& t) {
  TheoremReport r = area_label_report(t);
  if (!r.passed()) throw EngineError(ErrorCode::InternalInconsistency, r.detail);
  return r.values.front();
}

TheoremReport check_area_label(const RightTriangle& t) { return area_label_report(t); }

TheoremReport check_theorem6(const Rational& a, const Rational& b, const Rational& a1,
                             const Rational& b1) {
  require_positive({a, b, a1, b1});
  Construction c("theorem6", as_strings({a, b, a1, b1}));
  ProductSteps p = geom_mul(c, a, b);
  ProductSteps p1 = geom_mul(c, a1, b1);
  StepRef origin = c.place_point(kOrigin, "0");

  bool equal_areas = twice_area({kOrigin, {0, a}, {b, 0}}) == twice_area({kOrigin, {0, a1}, {b1, 0}});
  bool equal_products = c.scalar(p.intercept) == c.scalar(p1.intercept);
  c.assert_area_equal({origin, p.top, p.shadow, origin, p1.top, p1.shadow}, equal_products,
                      "area equality agrees with product equality");
  c.assert_equal(p.intercept, p1.intercept, equal_areas, "product equality agrees with area equality");

  Rational ab = c.scalar(p.intercept);
  Rational a1b1 = c.scalar(p1.intercept);
  std::string detail = "products " + ab.to_string() + " vs " + a1b1.to_string() +
                       "; equal areas: " + yes_no(equal_areas);
  return make_report("theorem6", std::move(c), {ab, a1b1}, std::move(detail));
}

TheoremReport check_commutativity(const Rational& a, const Rational& b) {
  Construction c("commutativity", as_strings({a, b}));
  ProductSteps ab = geom_mul(c, a, b);
  ProductSteps ba = geom_mul(c, b, a);
  c.assert_equal(ab.intercept, ba.intercept, true, "ab = ba");
  Rational x = c.scalar(ab.intercept), y = c.scalar(ba.intercept);
  std::string detail = x.to_string() + " = " + y.to_string();
  return make_report("commutativity", std::move(c), {x, y}, std::move(detail));
}

TheoremReport check_associativity(const Rational& a, const Rational& b, const Rational& c_val) {
  Construction c("associativity", as_strings({a, b, c_val}));
  ProductSteps bc = geom_mul(c, b, c_val);
  ProductSteps left = geom_mul(c, a, c.scalar(bc.intercept));
  ProductSteps ab = geom_mul(c, a, b);
  ProductSteps right = geom_mul(c, c.scalar(ab.intercept), c_val);
  c.assert_equal(left.intercept, right.intercept, true, "a(bc) = (ab)c");

  ProductSteps cb = geom_mul(c, c_val, b);
  ProductSteps a_cb = geom_mul(c, a, c.scalar(cb.intercept));
  ProductSteps c_ab = geom_mul(c, c_val, c.scalar(ab.intercept));
  c.assert_equal(a_cb.intercept, c_ab.intercept, true, "a(cb) = c(ab)");
  if (a.sign() > 0 && b.sign() > 0 && c_val.sign() > 0) {
    c.assert_parallel(cb.parallel, ab.parallel, true, "(0,c)-(cb,0) || (0,a)-(ab,0)");
  }

  Rational x = c.scalar(left.intercept), y = c.scalar(right.intercept);
  std::string detail = x.to_string() + " = " + y.to_string();
  return make_report("associativity", std::move(c), {x, y}, std::move(detail));
}

TheoremReport check_distributivity(const Rational& a, const Rational& b, const Rational& c_val) {
  Construction c("distributivity", as_strings({a, b, c_val}));
  Rational sum = b + c_val;
  ProductSteps whole = geom_mul(c, sum, a);
  ProductSteps ba = geom_mul(c, b, a);
  ProductSteps ca = geom_mul(c, c_val, a);
  Rational whole_v = c.scalar(whole.intercept);
  Rational ba_v = c.scalar(ba.intercept);
  Rational ca_v = c.scalar(ca.intercept);
  c.assert_equal(whole.intercept, ba_v + ca_v, true, "(b+c)a = ba + ca");

  if (a.sign() > 0 && b.sign() > 0 && c_val.sign() > 0) {
    StepRef origin = c.place_point(kOrigin, "0");
    StepRef ca_foot = c.place_point({ca_v, 0}, ca_v.to_string());
    StepRef ba_foot = c.place_point({ba_v, 0}, ba_v.to_string());
    StepRef apex = c.place_point({ba_v, c_val}, "A");
    StepRef whole_foot = c.place_point({whole_v, 0}, whole_v.to_string());
    c.assert_congruent({origin, ca.top, ca_foot, ba_foot, apex, whole_foot}, true,
                       "translated slice congruent to T(c, ca)");
  }

  std::string detail = whole_v.to_string() + " = " + ba_v.to_string() + " + " + ca_v.to_string();
  return make_report("distributivity", std::move(c), {whole_v, ba_v, ca_v}, std::move(detail));
}

namespace {

struct FracRoutes {
  StepRef lhs;
  StepRef rhs;
};

FracRoutes frac_routes(Construction& c, const Rational& a1, const Rational& b1, const Rational& a2,
                       const Rational& b2) {
  require_nonzero_denominator({b1, b2});
  FracRoutes f;
  // (a1 * 1/b1)(a2 * 1/b2)
  StepRef inv1 = geom_inverse(c, b1).intercept;
  StepRef inv2 = geom_inverse(c, b2).intercept;
  StepRef q1 = geom_mul(c, a1, c.scalar(inv1)).intercept;
  StepRef q2 = geom_mul(c, a2, c.scalar(inv2)).intercept;
  f.lhs = geom_mul(c, c.scalar(q1), c.scalar(q2)).intercept;
  // (a1 a2) * 1/(b1 b2), with 1/b1 * 1/b2 = 1/(b1 b2) as the inner step.
  StepRef num = geom_mul(c, a1, a2).intercept;
  StepRef den = geom_mul(c, b1, b2).intercept;
  StepRef inv_den = geom_inverse(c, c.scalar(den)).intercept;
  StepRef inv_product = geom_mul(c, c.scalar(inv1), c.scalar(inv2)).intercept;
  c.assert_equal(inv_product, inv_den, true, "1/b1 * 1/b2 = 1/(b1 b2)");
  f.rhs = geom_mul(c, c.scalar(num), c.scalar(inv_den)).intercept;
  c.assert_equal(f.lhs, f.rhs, true, "(a1/b1)(a2/b2) = (a1 a2)/(b1 b2)");
  return f;
}

}  // namespace

StepRef frac_mul(Construction& c, const Rational& a1, const Rational& b1, const Rational& a2,
                 const Rational& b2) {
  return frac_routes(c, a1, b1, a2, b2).lhs;
}

Rational frac_mul(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2) {
  Construction c("frac_mul", as_strings({a1, b1, a2, b2}));
  FracRoutes f = frac_routes(c, a1, b1, a2, b2);
  if (!c.assertions_hold()) {
    throw EngineError(ErrorCode::InternalInconsistency, "geometric fraction routes disagree");
  }
  return c.scalar(f.lhs);
}

TheoremReport check_frac_mul(const Rational& a1, const Rational& b1, const Rational& a2,
                             const Rational& b2) {
  Construction c("frac_mul", as_strings({a1, b1, a2, b2}));
  FracRoutes f = frac_routes(c, a1, b1, a2, b2);
  c.assert_equal(f.lhs, (a1 / b1) * (a2 / b2), true, "matches the oracle");
  Rational lhs = c.scalar(f.lhs), rhs = c.scalar(f.rhs);
  std::string detail = factor(a1) + "/" + factor(b1) + " * " + factor(a2) + "/" + factor(b2) +
                       " = " + lhs.to_string();
  return make_report("frac_mul", std::move(c), {lhs, rhs}, std::move(detail));
}

TheoremReport check_frac_identities(const Rational& a, const Rational& b, const Rational& k,
                                    const Rational& a2, const Rational& b2) {
  require_nonzero_denominator({b, k, b2});
  Construction c("frac_identities", as_strings({a, b, k, a2, b2}));
  auto quotient = [&c](const Rational& num, const Rational& den) {
    StepRef inv = geom_inverse(c, den).intercept;
    return geom_mul(c, num, c.scalar(inv)).intercept;
  };

  StepRef q = quotient(a, b);
  StepRef ak = geom_mul(c, a, k).intercept;
  StepRef bk = geom_mul(c, b, k).intercept;
  StepRef q_scaled = quotient(c.scalar(ak), c.scalar(bk));
  c.assert_equal(q, q_scaled, true, "a/b = (ak)/(bk)");
  c.assert_equal(q, a / b, true, "a/b matches the oracle");

  StepRef q2 = quotient(a2, b2);
  StepRef cross1 = geom_mul(c, a, b2).intercept;
  StepRef cross2 = geom_mul(c, a2, b).intercept;
  bool equal_quotients = c.scalar(q) == c.scalar(q2);
  bool equal_cross = c.scalar(cross1) == c.scalar(cross2);
  c.assert_equal(q, q2, equal_cross, "a/b = a2/b2 agrees with a b2 = a2 b");
  c.assert_equal(cross1, cross2, equal_quotients, "a b2 = a2 b agrees with a/b = a2/b2");

  std::vector<Rational> values{c.scalar(q), c.scalar(q_scaled), c.scalar(q2), c.scalar(cross1),
                               c.scalar(cross2)};
  std::string detail = values[0].to_string() + " = " + values[1].to_string() + "; a/b " +
                       (equal_quotients ? "=" : "!=") + " a2/b2, cross products " +
                       values[3].to_string() + (equal_cross ? " = " : " != ") + values[4].to_string();
  return make_report("frac_identities", std::move(c), std::move(values), std::move(detail));
}

}  // namespace geomul
