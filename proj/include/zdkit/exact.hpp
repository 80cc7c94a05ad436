// Exact integer and rational helpers shared by every bound computation.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zdkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown for invalid inputs and unmet preconditions.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a proven identity fails to hold. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

inline BigInt floor_of(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);  // always positive
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

/// "p/q" with q > 0, always written with a denominator.
inline std::string to_fraction_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

inline Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw DomainError("malformed fraction '" + text + "'");
  }
}

/// Largest s with s*s <= x.
inline std::uint64_t isqrt_floor(std::uint64_t x) {
  if (x < 2) return x;
  std::uint64_t s = x;
  std::uint64_t t = (s + 1) / 2;
  while (t < s) {  // Newton from above converges monotonically
    s = t;
    t = (s + x / s) / 2;
  }
  if (static_cast<unsigned __int128>(s) * s > x) throw InternalInconsistency("isqrt overshoot");
  if (static_cast<unsigned __int128>(s + 1) * (s + 1) <= x) throw InternalInconsistency("isqrt undershoot");
  return s;
}

/// Smallest s with s*s >= x, i.e. sqrt(SQUARE(x)).
inline std::uint64_t isqrt_ceil(std::uint64_t x) {
  std::uint64_t s = isqrt_floor(x);
  return static_cast<unsigned __int128>(s) * s == x ? s : s + 1;
}

inline std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw DomainError("value " + x.str() + " out of 64-bit range");
  }
  return x.convert_to<std::uint64_t>();
}

}  // namespace zdkit
