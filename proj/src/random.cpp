#include "geomul/random.hpp"

namespace geomul {

ScalarSampler::ScalarSampler(std::uint64_t seed) : rng_(seed) {}

ScalarSampler::ScalarSampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

std::int64_t ScalarSampler::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational ScalarSampler::any() {
  std::int64_t num = integer(-kMaxNumerator, kMaxNumerator);
  std::int64_t den = integer(1, kMaxDenominator);
  return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Rational ScalarSampler::nonzero() {
  for (;;) {
    Rational r = any();
    if (!r.is_zero()) return r;
  }
}

Rational ScalarSampler::positive() { return nonzero().abs(); }

Rational ScalarSampler::unit_interval() {
  std::int64_t den = integer(2, kMaxDenominator);
  std::int64_t num = integer(1, den - 1);
  return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Point ScalarSampler::point() { return {any(), any()}; }

Triangle ScalarSampler::triangle() {
  for (;;) {
    Triangle t{point(), point(), point()};
    if (!t.is_degenerate()) return t;
  }
}

RationalRotation RationalRotation::from_triple(std::int64_t m, std::int64_t n) {
  Rational hyp = Rational(m * m + n * n);
  return {Rational(m * m - n * n) / hyp, Rational(2 * m * n) / hyp};
}

RationalRotation RationalRotation::random(ScalarSampler& sampler) {
  std::int64_t m = sampler.integer(1, 40);
  std::int64_t n = sampler.integer(1, 40);
  RationalRotation r = from_triple(m, n);
  if (sampler.integer(0, 1) == 1) r.sin = -r.sin;
  return r;
}

Point RationalRotation::apply(const Point& p) const {
  return {cos * p.x - sin * p.y, sin * p.x + cos * p.y};
}

}  // namespace geomul
