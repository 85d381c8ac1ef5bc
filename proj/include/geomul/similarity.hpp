#pragma once

/**
 * @file similarity.hpp
 * @brief Square-root-free similarity decisions.
 *
 * Two triangles are similar when they have the same angles. The side test
 * compares sorted squared side lengths, so the scale factor is reported
 * squared: t2 = k * t1 yields k^2 = |side of t2|^2 / |side of t1|^2, which is
 * rational whenever both triangles have rational vertices.
 */

#include <optional>

#include "geomul/plane.hpp"
#include "geomul/rational.hpp"
#include "geomul/segment_arithmetic.hpp"
#include "geomul/trace.hpp"

namespace geomul {

/// k^2 when the sorted squared sides of t2 are a common multiple of those of t1.
std::optional<Rational> side_ratio_test(const Triangle& t1, const Triangle& t2);

/// Some vertex correspondence matches all three angles.
bool angle_test(const Triangle& t1, const Triangle& t2);

/// k^2, or nullopt when the triangles are not similar. Throws
/// DegenerateTriangle for collinear input and InternalInconsistency when the
/// side test and the angle test disagree.
std::optional<Rational> similar_scale_factor(const Triangle& t1, const Triangle& t2);

struct SplitResult {
  Triangle first;
  Triangle second;
  Point foot;  // strictly inside the base
};

/// Drops the altitude onto the base a-b when both base angles are acute, and
/// otherwise onto the longest side. The parts are
/// {base start, foot, apex} and {foot, base end, apex}. Steps are recorded in
/// `c` when given. Throws DegenerateTriangle.
SplitResult split_into_right_triangles(const Triangle& t, Construction* c = nullptr);

/// Similarity of t1 and t2 checked against the expected outcome
/// (expected_k2 == nullopt means "not similar"). values: {k^2} when similar.
TheoremReport check_similarity(const Triangle& t1, const Triangle& t2,
                               const std::optional<Rational>& expected_k2);

/// Both parts carry an exact right angle at the foot and their twice-areas
/// sum to the original. values: {2|first|, 2|second|, 2|t|}.
TheoremReport check_split(const Triangle& t);

}  // namespace geomul
