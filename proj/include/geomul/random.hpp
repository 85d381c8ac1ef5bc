#pragma once

#include <cstdint>
#include <random>

#include "geomul/plane.hpp"
#include "geomul/rational.hpp"

namespace geomul {

/// Seeded generator for randomized checks. Numerators are uniform in
/// [-10^6, 10^6] and denominators uniform in [1, 10^4].
class ScalarSampler {
 public:
  static constexpr std::int64_t kMaxNumerator = 1'000'000;
  static constexpr std::int64_t kMaxDenominator = 10'000;

  explicit ScalarSampler(std::uint64_t seed);
  ScalarSampler(std::uint64_t seed, std::uint64_t stream);

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  Rational any();
  Rational nonzero();
  Rational positive();
  /// 0 < r < 1.
  Rational unit_interval();
  Point point();
  /// Three random non-collinear points.
  Triangle triangle();

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Rotation with rational sine and cosine, built from a Pythagorean triple
/// (m^2 - n^2, 2mn, m^2 + n^2).
struct RationalRotation {
  Rational cos;
  Rational sin;

  static RationalRotation from_triple(std::int64_t m, std::int64_t n);
  static RationalRotation random(ScalarSampler& sampler);

  Point apply(const Point& p) const;
};

}  // namespace geomul
