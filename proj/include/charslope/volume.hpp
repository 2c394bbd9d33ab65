#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "charslope/geodesic.hpp"

namespace charslope {

/// Hyperbolic volume of the unfilled pattern complement (the quantity every
/// filled volume is compared against).
struct BaseVolume {
  double value = 0.0;
};

inline BaseVolume make_base_volume(double v) {
  if (!(v > 0.0)) fail(Errc::invalid_params, "base volume must be positive");
  return BaseVolume{v};
}

/// Volume shipped for the reference pattern complement (census item m129).
inline BaseVolume reference_base_volume() { return BaseVolume{3.6638623767}; }

/// The Dehn-filling volume scale (1 - 3*(2pi/q)^2)^(3/2) in (0,1); the
/// filled volume is at least this fraction of the unfilled one. Requires
/// q_min >= 11 so the slope-length floor q/sqrt(3) exceeds 2*pi.
inline double filled_volume_scale(int q_min) {
  if (q_min <= 10) fail(Errc::below_eleven, "q_min must be at least 11");
  const double t = detail::two_pi / static_cast<double>(q_min);
  const double x = 1.0 - 3.0 * t * t;
  return x * std::sqrt(x);
}

/// Upper volume bound base/(1 - 3*(2pi/q_min)^2)^(3/2) for any pattern
/// complement sharing a filling with the reference at denominator >= q_min.
inline double v_max(int q_min, BaseVolume base) {
  if (!(base.value > 0.0)) fail(Errc::invalid_params, "base volume must be positive");
  return base.value / filled_volume_scale(q_min);
}

/// Inverse of v_max: the least denominator whose volume bound is at most V,
/// ceil(2pi*sqrt(3/(1 - (base/V)^(2/3)))), clamped up to 11.
inline int q_min_from_vmax(double v, BaseVolume base) {
  if (!(v > base.value)) fail(Errc::volume_too_small, "volume cap must exceed the base volume");
  const double t = 1.0 - std::pow(base.value / v, 2.0 / 3.0);
  const long long q = detail::guarded_ceil(detail::two_pi * std::sqrt(3.0 / t));
  return static_cast<int>(std::max<long long>(q, 11));
}

/// One census-completeness stage: the census is assumed complete through
/// all a_k items up to (and including) boundary_volume, and q_k is the
/// least denominator whose bound V_k lands strictly below that boundary.
struct StageRow {
  int k = 0;
  std::string boundary;      // exact decimal string as shipped
  double boundary_value = 0.0;
  long long a_k = 0;         // item count, carried as input data
  int q_k = 0;
  double v_k = 0.0;
};

struct StageInput {
  std::string boundary;
  long long a_k = 0;
};

inline std::vector<StageRow> stage_table(const std::vector<StageInput>& inputs, BaseVolume base) {
  std::vector<StageRow> rows;
  rows.reserve(inputs.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    StageRow row;
    row.k = static_cast<int>(i) + 1;
    row.boundary = inputs[i].boundary;
    row.a_k = inputs[i].a_k;
    try {
      row.boundary_value = std::stod(inputs[i].boundary);
    } catch (const std::exception&) {
      fail(Errc::invalid_params, "boundary volume is not a decimal: '" + inputs[i].boundary + "'");
    }
    if (!(row.boundary_value > base.value))
      fail(Errc::volume_too_small, "boundary " + inputs[i].boundary + " not above the base volume");
    if (!(row.boundary_value > prev))
      fail(Errc::invalid_params, "boundary volumes must be strictly increasing");
    prev = row.boundary_value;

    // Strictly-below comparisons carry a 1e-12 guard: a bound within the
    // guard of the boundary is treated as not below it.
    const auto below = [&](int q) { return v_max(q, base) < row.boundary_value - 1e-12; };
    int q = q_min_from_vmax(row.boundary_value, base);
    while (!below(q)) ++q;
    while (q > 11 && below(q - 1)) --q;
    row.q_k = q;
    row.v_k = v_max(q, base);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace charslope
