#include "geomul/similarity.hpp"

#include <algorithm>

#include "geomul/errors.hpp"

namespace geomul {

namespace {

Triangle checked(const Triangle& t) { return make_triangle(t.a, t.b, t.c); }

bool angle_at(const std::array<Point, 3>& v1, std::size_t i, const std::array<Point, 3>& v2,
              std::size_t j, const std::array<std::size_t, 3>& perm) {
  // Rays to the other two vertices, in corresponding order.
  std::size_t p = (i + 1) % 3, q = (i + 2) % 3;
  return angles_equal(v1[i], v1[p], v1[q], v2[j], v2[perm[p]], v2[perm[q]]);
}

std::string vertices_string(const Triangle& t) {
  return to_string(t.a) + " " + to_string(t.b) + " " + to_string(t.c);
}

Rational bool_value(bool b) { return b ? 1 : 0; }

}  // namespace

std::optional<Rational> side_ratio_test(const Triangle& t1, const Triangle& t2) {
  auto s1 = squared_sides(checked(t1));
  auto s2 = squared_sides(checked(t2));
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  Rational k2 = s2[0] / s1[0];
  for (std::size_t i = 1; i < 3; ++i) {
    if (s2[i] != k2 * s1[i]) return std::nullopt;
  }
  return k2;
}

bool angle_test(const Triangle& t1, const Triangle& t2) {
  auto v1 = checked(t1).vertices();
  auto v2 = checked(t2).vertices();
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    bool all = true;
    for (std::size_t i = 0; i < 3 && all; ++i) all = angle_at(v1, i, v2, perm[i], perm);
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<Rational> similar_scale_factor(const Triangle& t1, const Triangle& t2) {
  std::optional<Rational> k2 = side_ratio_test(t1, t2);
  bool angles = angle_test(t1, t2);
  if (k2.has_value() != angles) {
    throw EngineError(ErrorCode::InternalInconsistency,
                      "side test and angle test disagree for " + vertices_string(t1) + " vs " +
                          vertices_string(t2));
  }
  return k2;
}

SplitResult split_into_right_triangles(const Triangle& t, Construction* c) {
  Triangle tri = checked(t);
  auto v = tri.vertices();
  // Keep the given base a-b when the foot falls strictly inside it; otherwise
  // use the longest side, whose adjacent angles are always acute.
  std::size_t apex = 2;
  if (dot(tri.b - tri.a, tri.c - tri.a).sign() <= 0 || dot(tri.a - tri.b, tri.c - tri.b).sign() <= 0) {
    auto sides = squared_sides(tri);  // sides[i] is opposite v[i]
    apex = static_cast<std::size_t>(std::max_element(sides.begin(), sides.end()) - sides.begin());
  }
  const Point& start = v[(apex + 1) % 3];
  const Point& end = v[(apex + 2) % 3];
  const Point& top = v[apex];

  Point foot;
  if (c != nullptr) {
    StepRef ps = c->place_point(start);
    StepRef pe = c->place_point(end);
    StepRef pt = c->place_point(top);
    StepRef base = c->draw_line_through(ps, pe, "base");
    StepRef altitude = c->draw_perpendicular(pt, base, "altitude");
    foot = c->point(c->mark_intersection(base, altitude, "foot"));
  } else {
    Line base = line_through(start, end);
    foot = intersect(base, perpendicular_through(top, base));
  }

  return {Triangle{start, foot, top}, Triangle{foot, end, top}, foot};
}

TheoremReport check_similarity(const Triangle& t1, const Triangle& t2,
                               const std::optional<Rational>& expected_k2) {
  Construction c("similarity", {vertices_string(t1), vertices_string(t2)});
  for (const Point& p : t1.vertices()) c.place_point(p);
  for (const Point& p : t2.vertices()) c.place_point(p);

  std::optional<Rational> k2 = side_ratio_test(t1, t2);
  bool angles = angle_test(t1, t2);
  c.assert_equal(bool_value(angles), bool_value(k2.has_value()), true, "side test agrees with angle test");
  c.assert_equal(bool_value(k2.has_value()), bool_value(expected_k2.has_value()), true,
                 "similarity matches expectation");
  std::vector<Rational> values;
  std::string detail = "NotSimilar";
  if (k2 && expected_k2) {
    c.assert_equal(*k2, *expected_k2, true, "k^2 matches expectation");
  }
  if (k2) {
    values.push_back(*k2);
    detail = "k^2 = " + k2->to_string();
  }
  return make_report("similarity", std::move(c), std::move(values), std::move(detail));
}

TheoremReport check_split(const Triangle& t) {
  Construction c("split", {vertices_string(t)});
  SplitResult split = split_into_right_triangles(t, &c);
  Rational whole = twice_area(t);
  Rational first = twice_area(split.first);
  Rational second = twice_area(split.second);
  c.assert_equal(dot(split.first.a - split.foot, split.first.c - split.foot), Rational(0), true,
                 "right angle at the foot (first part)");
  c.assert_equal(dot(split.second.b - split.foot, split.second.c - split.foot), Rational(0), true,
                 "right angle at the foot (second part)");
  c.assert_equal(first + second, whole, true, "parts add up to the whole");
  std::string detail = "foot " + to_string(split.foot);
  return make_report("split", std::move(c), {first, second, whole}, std::move(detail));
}

}  // namespace geomul
