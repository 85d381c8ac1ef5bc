#pragma once

// Reference fractions for tests. Kept apart from geomul::Rational: values are
// normalized by hand from integer numerator/denominator pairs, and products
// are taken straight from the numerators and denominators.

#include <gmpxx.h>

#include <string>

#include "geomul/rational.hpp"

namespace oracle {

struct Frac {
  mpz_class num;
  mpz_class den{1};
};

inline Frac normalize(mpz_class n, mpz_class d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 0 && g != 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  return {n, d};
}

inline Frac of(const geomul::Rational& r) {
  return normalize(r.numerator(), r.denominator());
}

inline Frac mul(const Frac& x, const Frac& y) { return normalize(x.num * y.num, x.den * y.den); }
inline Frac add(const Frac& x, const Frac& y) {
  return normalize(x.num * y.den + y.num * x.den, x.den * y.den);
}
inline Frac reciprocal(const Frac& x) { return normalize(x.den, x.num); }
inline bool less(const Frac& x, const Frac& y) { return x.num * y.den < y.num * x.den; }

inline std::string text(const Frac& x) {
  return x.den == 1 ? x.num.get_str() : x.num.get_str() + "/" + x.den.get_str();
}

// Exact equality of an engine value with a reference value, compared on
// cross products so no canonical form is assumed.
inline bool same(const geomul::Rational& r, const Frac& x) {
  return r.numerator() * x.den == x.num * r.denominator();
}

}  // namespace oracle
