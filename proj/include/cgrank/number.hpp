#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "cgrank/errors.hpp"

namespace cgrank {

/// Coefficient type of integer inequalities. Every operation on it is checked.
using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
/// Always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using BigVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("int64 overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("int64 overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("int64 overflow in multiplication");
  return r;
}

inline Int to_int(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw Overflow("value does not fit in int64: " + v.str());
  }
  return static_cast<Int>(v);
}

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Floor division for big integers (rounds towards negative infinity).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

inline BigInt ceil(const Rational& q) { return ceil_div(numerator(q), denominator(q)); }
inline BigInt floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

inline BigInt gcd_of(const BigVector& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

/// Divides a big integer vector by the gcd of its entries (no-op for zero).
inline void make_primitive(BigVector& v) {
  BigInt g = gcd_of(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

/// Scales a rational vector by the positive lcm of its denominators.
inline BigVector clear_denominators(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  BigVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x) * (l / denominator(x)));
  return out;
}

inline Int max_abs(const IntVector& v) {
  Int m = 0;
  for (Int x : v) m = std::max(m, x < 0 ? checked_sub(0, x) : x);
  return m;
}

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace cgrank
