#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "charslope/error.hpp"
#include "charslope/slope.hpp"

namespace charslope {

/// Fixed numeric inputs to every geodesic-length bound. The decimal values
/// are part of the contract and are pinned by regression tests; do not
/// "improve" their precision.
struct BoundConstants {
  /// Factor by which drilling a short geodesic can stretch another one.
  static constexpr double drill_factor = 1.9793;
  /// Quadratic shifts in the core-length window 2pi/(nl^2 +- shift).
  static constexpr double quad_shift_upper = 28.78;
  static constexpr double quad_shift_lower = 16.17;
  /// Normalized meridian length above which the window applies.
  static constexpr double nl_hypothesis = 7.823;
  /// Alternative hypothesis: a core already known to be this short.
  static constexpr double short_core_hypothesis = 0.0996;
  /// Both geodesics of a link must be at most this long to drill one.
  static constexpr double pair_threshold = 0.0735;
  /// Core-length cap used verbatim by the uniqueness certificate.
  static constexpr double core_cap = 0.0706;
  /// Universal lower bound 2*sqrt(3) on maximal-cusp area.
  static constexpr double cusp_area_floor = 2.0 * std::numbers::sqrt3;
  /// Slopes longer than this keep the filling hyperbolic.
  static constexpr double six_theorem = 6.0;
  /// Denominator floor below which no certificate is issued.
  static constexpr int q_floor = 35;
};

namespace detail {

inline constexpr double six_sqrt3 = 6.0 * std::numbers::sqrt3;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Ceiling with a soundness guard: values within 1e-9 of an integer snap to
/// it (so algebraically exact thresholds reproduce), otherwise the ceiling
/// is taken at the upper end of a +-1e-12 interval around the computed
/// value (rounding a threshold up is safe; down is not).
inline long long guarded_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(x + 1e-12));
}

}  // namespace detail

/// Least denominator magnitude q such that filling a slope with |q| at
/// least this value forces the core curve below every relevant length cap:
/// ceil(sqrt(6*sqrt(3) * (2*pi*1.9793/systole + 28.78))).
inline int q_frak(double systole) {
  if (!(systole > 0.0)) fail(Errc::non_positive_systole, "systole must be positive");
  const double x = std::sqrt(detail::six_sqrt3 *
                             (detail::two_pi * BoundConstants::drill_factor / systole +
                              BoundConstants::quad_shift_upper));
  return static_cast<int>(detail::guarded_ceil(x));
}

/// Lower bound |q|/sqrt(3) on the length of a slope p/q measured on a
/// maximal cusp whose meridian admits a non-hyperbolic filling.
inline double slope_length_floor(Int q) {
  return static_cast<double>(detail::checked_abs(q)) / std::numbers::sqrt3;
}

/// Lower bound |q|/sqrt(6*sqrt(3)) on the normalized length of p/q.
inline double normalized_length_floor(Int q) {
  return static_cast<double>(detail::checked_abs(q)) / std::sqrt(detail::six_sqrt3);
}

/// Two-sided window (2pi/(nl^2 + 16.17), 2pi/(nl^2 - 28.78)) for the core
/// length given the normalized meridian length nl >= 7.823.
inline std::pair<double, double> core_length_window(double nl) {
  if (!(nl >= BoundConstants::nl_hypothesis))
    fail(Errc::hypothesis_not_met, "normalized length below 7.823");
  const double nl2 = nl * nl;
  return {detail::two_pi / (nl2 + BoundConstants::quad_shift_lower),
          detail::two_pi / (nl2 - BoundConstants::quad_shift_upper)};
}

/// Core-length upper bound 2pi/(q^2/(6*sqrt(3)) - 28.78) as a function of
/// the slope denominator alone. Needs |q| >= 18.
inline double core_length_cap(Int q) {
  const double d = static_cast<double>(detail::checked_mul(q, q)) / detail::six_sqrt3 -
                   BoundConstants::quad_shift_upper;
  if (!(d > 0.0)) fail(Errc::denominator_non_positive, "|q| too small for the core-length cap");
  return detail::two_pi / d;
}

/// Length bound 1.9793*l for a geodesic of length l <= 0.0735 after
/// drilling another geodesic of the same length class.
inline double drilled_length_cap(double l) {
  if (!(l > 0.0)) fail(Errc::hypothesis_not_met, "length must be positive");
  if (l > BoundConstants::pair_threshold)
    fail(Errc::hypothesis_not_met, "length above the 0.0735 pair threshold");
  return BoundConstants::drill_factor * l;
}

/// Certificate that the filled core curve is the unique shortest geodesic.
struct CoreCertificate {
  bool certified = false;
  int q_required = 0;
  double core_length_cap = 0.0;
  double drilled_length_cap = 0.0;
  std::string reason;
};

/// Certifies |q| >= max{35, q_frak(systole)}. When certified, the core is
/// shorter than min{0.0706, systole/1.9793}, so any rival geodesic would
/// drill back to length below min{0.14, systole} -- impossible.
inline CoreCertificate core_is_unique_shortest(double systole_l0, Int q) {
  if (!(systole_l0 > 0.0)) fail(Errc::non_positive_systole, "systole must be positive");
  CoreCertificate cert;
  cert.q_required = std::max(BoundConstants::q_floor, q_frak(systole_l0));
  cert.core_length_cap = std::min(BoundConstants::core_cap, systole_l0 / BoundConstants::drill_factor);
  cert.drilled_length_cap = BoundConstants::drill_factor * cert.core_length_cap;
  cert.certified = detail::checked_abs(q) >= cert.q_required;
  if (cert.certified) {
    cert.reason = "|q| >= " + std::to_string(cert.q_required) +
                  ": core curve is the unique shortest geodesic";
  } else {
    cert.reason = "|q| = " + std::to_string(detail::checked_abs(q)) + " below required " +
                  std::to_string(cert.q_required);
  }
  return cert;
}

}  // namespace charslope
