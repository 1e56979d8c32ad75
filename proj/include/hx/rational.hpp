#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hx {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Overflow-checked int64 arithmetic for the integer Hecke ring.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

template <class C>
C coeff_add(const C& a, const C& b) {
  if constexpr (std::is_same_v<C, std::int64_t>) return checked_add(a, b);
  else return a + b;
}

template <class C>
C coeff_mul(const C& a, const C& b) {
  if constexpr (std::is_same_v<C, std::int64_t>) return checked_mul(a, b);
  else return a * b;
}

}  // namespace hx
