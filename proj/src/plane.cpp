#include "geomul/plane.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "geomul/errors.hpp"

namespace geomul {

Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }

std::string to_string(const Point& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

Line Line::from_coefficients(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() && b.is_zero()) {
    throw EngineError(ErrorCode::CoincidentPoints, "line with zero normal vector");
  }
  // Clear denominators.
  BigInt scale = 1;
  for (const Rational* r : {&a, &b, &c}) {
    BigInt den = r->denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  BigInt ia = a.numerator() * (scale / a.denominator());
  BigInt ib = b.numerator() * (scale / b.denominator());
  BigInt ic = c.numerator() * (scale / c.denominator());

  BigInt g;
  mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
  ia /= g;
  ib /= g;
  ic /= g;

  int lead = ia != 0 ? sgn(ia) : sgn(ib);
  if (lead < 0) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  return Line(std::move(ia), std::move(ib), std::move(ic));
}

Rational Line::evaluate(const Point& p) const {
  return Rational(a_) * p.x + Rational(b_) * p.y + Rational(c_);
}

std::string to_string(const Line& l) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const BigInt& coeff, const char* var) {
    if (coeff == 0) return;
    BigInt mag = abs(coeff);
    if (first) {
      if (coeff < 0) os << "-";
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (mag != 1 || var[0] == '\0') os << mag.get_str();
    os << var;
    first = false;
  };
  term(l.a(), "x");
  term(l.b(), "y");
  term(l.c(), "");
  os << " = 0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Line& l) { return os << to_string(l); }

Segment::Segment(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == q_) throw EngineError(ErrorCode::CoincidentPoints, "degenerate segment at " + to_string(p_));
}

Line Segment::line() const { return line_through(p_, q_); }

bool Triangle::is_degenerate() const { return twice_area(*this).is_zero(); }

Triangle make_triangle(Point a, Point b, Point c) {
  Triangle t{std::move(a), std::move(b), std::move(c)};
  if (t.is_degenerate()) {
    throw EngineError(ErrorCode::DegenerateTriangle,
                      "collinear vertices " + to_string(t.a) + " " + to_string(t.b) + " " +
                          to_string(t.c));
  }
  return t;
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw EngineError(ErrorCode::CoincidentPoints, "line through " + to_string(p) + " twice");
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  Rational c = -(a * p.x + b * p.y);
  return Line::from_coefficients(a, b, c);
}

Line parallel_through(const Point& p, const Line& l) {
  Rational a(l.a());
  Rational b(l.b());
  return Line::from_coefficients(a, b, -(a * p.x + b * p.y));
}

Line perpendicular_through(const Point& p, const Line& l) {
  // Normal (a, b) becomes the direction.
  Rational a(l.b());
  Rational b = -Rational(l.a());
  return Line::from_coefficients(a, b, -(a * p.x + b * p.y));
}

Point intersect(const Line& l1, const Line& l2) {
  BigInt det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) {
    if (l1 == l2) throw EngineError(ErrorCode::CoincidentLines, to_string(l1));
    throw EngineError(ErrorCode::ParallelLines, to_string(l1) + " and " + to_string(l2));
  }
  BigInt xn = l1.b() * l2.c() - l2.b() * l1.c();
  BigInt yn = l1.c() * l2.a() - l2.c() * l1.a();
  return {Rational(xn, det), Rational(yn, det)};
}

Rational x_intercept(const Line& l) {
  if (l.is_horizontal()) {
    if (l.c() == 0) throw EngineError(ErrorCode::NoUniqueIntercept, "the x-axis has no unique x-intercept");
    throw EngineError(ErrorCode::NoIntercept, to_string(l) + " is horizontal");
  }
  return Rational(-l.c(), l.a());
}

Rational y_intercept(const Line& l) {
  if (l.is_vertical()) {
    if (l.c() == 0) throw EngineError(ErrorCode::NoUniqueIntercept, "the y-axis has no unique y-intercept");
    throw EngineError(ErrorCode::NoIntercept, to_string(l) + " is vertical");
  }
  return Rational(-l.c(), l.b());
}

bool is_parallel(const Line& l1, const Line& l2) {
  return l1.a() * l2.b() == l2.a() * l1.b();
}

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

Rational twice_area(const Triangle& t) { return cross(t.b - t.a, t.c - t.a).abs(); }

Rational squared_distance(const Point& p, const Point& q) {
  Point d = p - q;
  return dot(d, d);
}

std::array<Rational, 3> squared_sides(const Triangle& t) {
  return {squared_distance(t.b, t.c), squared_distance(t.c, t.a), squared_distance(t.a, t.b)};
}

bool angles_equal(const Point& v1, const Point& p1, const Point& q1,
                  const Point& v2, const Point& p2, const Point& q2) {
  if (p1 == v1 || q1 == v1 || p2 == v2 || q2 == v2) {
    throw EngineError(ErrorCode::DegenerateRay, "ray endpoint coincides with its vertex");
  }
  Point u1 = p1 - v1, w1 = q1 - v1;
  Point u2 = p2 - v2, w2 = q2 - v2;
  Rational c1 = cross(u1, w1).abs(), d1 = dot(u1, w1);
  Rational c2 = cross(u2, w2).abs(), d2 = dot(u2, w2);
  return d1.sign() == d2.sign() && c1 * d2 == c2 * d1;
}

bool congruent_sss(const Triangle& t1, const Triangle& t2) {
  auto s1 = squared_sides(t1);
  auto s2 = squared_sides(t2);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  return s1 == s2;
}

}  // namespace geomul
