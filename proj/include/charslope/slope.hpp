#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>

#include "charslope/error.hpp"

namespace charslope {

using Int = std::int64_t;

namespace detail {

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in slope arithmetic");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in slope arithmetic");
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "integer overflow in slope arithmetic");
  return r;
}

inline Int checked_abs(Int a) {
  if (a == INT64_MIN) fail(Errc::overflow, "integer overflow in slope arithmetic");
  return a < 0 ? -a : a;
}

}  // namespace detail

/// A surgery slope p/q in lowest terms on the meridian-longitude basis.
/// Canonical form: q >= 0; infinity is 1/0; zero is 0/1. Mirror slopes
/// -p/q are distinct values.
struct Slope {
  Int p = 0;
  Int q = 1;

  friend auto operator<=>(const Slope&, const Slope&) = default;
};

inline Slope make_slope(Int p, Int q) {
  if (p == 0 && q == 0) fail(Errc::zero_zero, "slope 0/0 is undefined");
  const Int g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) p = 1;  // both signs of 1/0 name the same meridian
  return Slope{p, q};
}

inline Slope infinity_slope() { return Slope{1, 0}; }

inline bool is_infinite(const Slope& s) { return s.q == 0; }

/// Geometric intersection number |p1*q2 - q1*p2| of two slopes.
inline Int distance(const Slope& a, const Slope& b) {
  return detail::checked_abs(
      detail::checked_sub(detail::checked_mul(a.p, b.q), detail::checked_mul(a.q, b.p)));
}

/// Slope seen from the companion after an (r,s)-cable compresses:
/// p/q becomes p/(q*s^2).
inline Slope cable_pushdown(const Slope& s, Int cable_winding) {
  if (detail::checked_abs(cable_winding) <= 1)
    fail(Errc::invalid_cable, "cable winding must satisfy |s| > 1");
  if (is_infinite(s)) fail(Errc::infinite_slope, "cable pushdown needs a finite slope");
  return make_slope(s.p, detail::checked_mul(s.q, detail::checked_mul(cable_winding, cable_winding)));
}

/// Distance from s to the regular-fibre slope r*s_c (an integer slope).
inline Int fiber_distance(const Slope& s, Int r, Int cable_winding) {
  if (is_infinite(s)) fail(Errc::infinite_slope, "fiber distance needs a finite slope");
  return distance(s, make_slope(detail::checked_mul(r, cable_winding), 1));
}

inline Slope mirror(const Slope& s) { return make_slope(-s.p, s.q); }

inline bool slopes_equal_up_to_sign(const Slope& a, const Slope& b) {
  return a == b || a == mirror(b);
}

inline std::string to_string(const Slope& s) {
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

/// Parses "p/q" (optional leading sign); the result is canonicalized.
inline Slope parse_slope(std::string_view text) {
  const auto bad = [&] { fail(Errc::invalid_params, "not a slope: '" + std::string(text) + "'"); };
  Int p = 0, q = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;  // from_chars takes '-' but not '+'
  auto [mid, ec1] = std::from_chars(first, last, p);
  if (ec1 != std::errc{} || mid == last || *mid != '/') bad();
  auto [end, ec2] = std::from_chars(mid + 1, last, q);
  if (ec2 != std::errc{} || end != last) bad();
  if (p == 0 && q == 0) bad();
  return make_slope(p, q);
}

}  // namespace charslope
