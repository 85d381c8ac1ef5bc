#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision fractions.
 *
 * Values are kept in lowest terms with a positive denominator, zero is 0/1,
 * so structural equality is numeric equality. Storage is a GMP rational.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace geomul {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : value_(std::is_signed_v<T> ? mpq_class(static_cast<long>(value))
                                   : mpq_class(static_cast<unsigned long>(value))) {}

  /// Throws EngineError(DivisionByZero) when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  explicit Rational(const BigInt& integer) : value_(integer) {}

  /// Parses "p" or "p/q" (optional leading '-', decimal digits only).
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Throws EngineError(DivisionByZero) for zero.
  Rational inverse() const;
  Rational abs() const;

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Named forms of the arithmetic family, mostly for call sites that read
// better as functions (and for the oracle side of tests).
inline Rational add(const Rational& x, const Rational& y) { return x + y; }
inline Rational subtract(const Rational& x, const Rational& y) { return x - y; }
inline Rational multiply(const Rational& x, const Rational& y) { return x * y; }
inline Rational negate(const Rational& x) { return -x; }
inline Rational invert(const Rational& x) { return x.inverse(); }
inline std::strong_ordering compare(const Rational& x, const Rational& y) { return x <=> y; }

}  // namespace geomul
