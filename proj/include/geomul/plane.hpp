#pragma once

/**
 * @file plane.hpp
 * @brief Exact plane primitives over the rationals.
 *
 * Lines keep integer coefficients (a, b, c) of a*x + b*y + c = 0 in a
 * canonical form: gcd(|a|,|b|,|c|) = 1 and the first nonzero of (a, b)
 * positive. Equality, incidence and parallelism are therefore plain integer
 * comparisons. Triangle areas are reported doubled.
 */

#include <array>
#include <iosfwd>
#include <string>

#include "geomul/rational.hpp"

namespace geomul {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

Point operator-(const Point& p, const Point& q);
Point operator+(const Point& p, const Point& q);

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

class Line {
 public:
  /// Builds the canonical line a*x + b*y + c = 0 from rational coefficients.
  /// Throws EngineError(CoincidentPoints) when a = b = 0.
  static Line from_coefficients(const Rational& a, const Rational& b, const Rational& c);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }

  /// a*x + b*y + c evaluated at p; zero iff p lies on the line.
  Rational evaluate(const Point& p) const;
  bool contains(const Point& p) const { return evaluate(p).is_zero(); }

  bool is_horizontal() const { return a_ == 0; }
  bool is_vertical() const { return b_ == 0; }

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }

 private:
  Line(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  BigInt a_;
  BigInt b_;
  BigInt c_;
};

std::string to_string(const Line& l);
std::ostream& operator<<(std::ostream& os, const Line& l);

/// Segment with distinct endpoints.
class Segment {
 public:
  /// Throws EngineError(CoincidentPoints) when p == q.
  Segment(Point p, Point q);

  const Point& p() const { return p_; }
  const Point& q() const { return q_; }
  Line line() const;

 private:
  Point p_;
  Point q_;
};

struct Triangle {
  Point a;
  Point b;
  Point c;

  std::array<Point, 3> vertices() const { return {a, b, c}; }
  bool is_degenerate() const;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Checked constructor for theorem inputs: throws
/// EngineError(DegenerateTriangle) for collinear vertices.
Triangle make_triangle(Point a, Point b, Point c);

Line line_through(const Point& p, const Point& q);
Line parallel_through(const Point& p, const Line& l);
Line perpendicular_through(const Point& p, const Line& l);

/// Throws ParallelLines, or CoincidentLines when l1 == l2.
Point intersect(const Line& l1, const Line& l2);

/// Throws NoUniqueIntercept for the x-axis and NoIntercept for other
/// horizontal lines.
Rational x_intercept(const Line& l);

/// Same contract with the axes swapped.
Rational y_intercept(const Line& l);

/// Identical lines count as parallel.
bool is_parallel(const Line& l1, const Line& l2);

Rational cross(const Point& u, const Point& v);
Rational dot(const Point& u, const Point& v);

/// 2 * area, always >= 0; zero for collinear vertices.
Rational twice_area(const Triangle& t);

Rational squared_distance(const Point& p, const Point& q);

/// Squared lengths of the sides opposite a, b and c, in that order.
std::array<Rational, 3> squared_sides(const Triangle& t);

/// Unsigned angle p1-v1-q1 equals angle p2-v2-q2, decided on (|cross|, dot)
/// pairs. Throws DegenerateRay when a ray endpoint equals its vertex.
bool angles_equal(const Point& v1, const Point& p1, const Point& q1,
                  const Point& v2, const Point& p2, const Point& q2);

/// Equal multisets of squared side lengths.
bool congruent_sss(const Triangle& t1, const Triangle& t2);

}  // namespace geomul
