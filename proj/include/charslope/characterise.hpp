#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "charslope/classify.hpp"
#include "charslope/geodesic.hpp"
#include "charslope/volume.hpp"

namespace charslope {

// ---------------------------------------------------------------------------
// Knot families accepted by the bound API.

struct HyperbolicKnot {
  double systole = 0.0;  // systole of the knot complement
};

struct SatelliteByHyperbolicPattern {
  double pattern_systole = 0.0;  // systole of the 2-component pattern complement
  Int winding = 0;
};

struct WhiteheadDoubleKnot {
  Int clasp = 0;  // n != 0
  Int twist = 0;
  std::optional<double> systole;  // of the clasped pattern complement; overrides the fixture
};

struct TwistKnot {
  int sign = +1;  // clasp sign, +-1
  Int twists = 0;
};

using KnotClass = std::variant<HyperbolicKnot, SatelliteByHyperbolicPattern, WhiteheadDoubleKnot, TwistKnot>;

// ---------------------------------------------------------------------------
// Bound reports.

enum class NumeratorCondition { none, gcd_with_winding_ne_1, abs_p_ne_1 };

struct BoundReport {
  int q_threshold = 0;
  NumeratorCondition numerator_condition = NumeratorCondition::none;
  Int winding = 0;  // meaningful for gcd_with_winding_ne_1
  std::string provenance;
  std::optional<int> stage;
};

/// Systole fixtures: twist knots keyed by the number of twists for the
/// positively clasped family (negate for the mirror family), Whitehead
/// patterns keyed by |clasp|. Stage rows back the census-refined bounds.
struct Fixtures {
  std::map<Int, double> twist_systoles;
  std::map<Int, double> whitehead_systoles;
  std::vector<StageRow> stages;
};

namespace detail_bound {

inline int floor_or_qfrak(double systole) {
  return std::max(BoundConstants::q_floor, q_frak(systole));
}

inline double twist_systole(const Fixtures& fx, int sign, Int twists) {
  const Int key = sign > 0 ? twists : -twists;
  const auto it = fx.twist_systoles.find(key);
  if (it == fx.twist_systoles.end())
    fail(Errc::missing_systole,
         "no shipped systole for a twist knot with " + std::to_string(twists) + " twists");
  return it->second;
}

inline bool stage_eligible(const WhiteheadDoubleKnot& k) {
  if (detail::checked_abs(k.clasp) != 1) return false;
  const Int t = k.clasp > 0 ? k.twist : -k.twist;  // twist count relative to the clasp sign
  return t >= -1 && t <= 2;
}

}  // namespace detail_bound

/// The certified characterising-slope condition for each knot family:
/// a denominator threshold plus (for satellites) a numerator condition.
inline BoundReport characterising_bound(const KnotClass& knot, const Fixtures& fixtures,
                                        std::optional<int> stage = std::nullopt) {
  BoundReport report;
  if (stage && !std::holds_alternative<WhiteheadDoubleKnot>(knot))
    fail(Errc::invalid_stage, "census stages apply only to Whitehead doubles");

  if (const auto* k = std::get_if<HyperbolicKnot>(&knot)) {
    if (!(k->systole > 0.0)) fail(Errc::non_positive_systole, "systole must be positive");
    report.q_threshold = detail_bound::floor_or_qfrak(k->systole);
    report.provenance = "theorem_new";
    return report;
  }

  if (const auto* k = std::get_if<SatelliteByHyperbolicPattern>(&knot)) {
    if (!(k->pattern_systole > 0.0)) fail(Errc::non_positive_systole, "systole must be positive");
    report.q_threshold = detail_bound::floor_or_qfrak(k->pattern_systole);
    report.numerator_condition = NumeratorCondition::gcd_with_winding_ne_1;
    report.winding = k->winding;
    report.provenance = "theorem_main";
    return report;
  }

  if (const auto* k = std::get_if<WhiteheadDoubleKnot>(&knot)) {
    if (k->clasp == 0) fail(Errc::invalid_clasp, "clasp must be nonzero");
    report.numerator_condition = NumeratorCondition::abs_p_ne_1;
    if (stage) {
      if (!detail_bound::stage_eligible(*k))
        fail(Errc::invalid_stage,
             "stage bounds need |clasp| = 1 and a clasp-relative twist count in {-1,0,1,2}");
      if (*stage < 1 || *stage > static_cast<int>(fixtures.stages.size()))
        fail(Errc::invalid_stage, "stage " + std::to_string(*stage) + " is not in the table");
      report.q_threshold = fixtures.stages[static_cast<std::size_t>(*stage - 1)].q_k;
      report.provenance = "theorem_refined";
      report.stage = *stage;
      return report;
    }
    const Int n = detail::checked_abs(k->clasp);
    if (n <= 4) {
      report.q_threshold = BoundConstants::q_floor;
    } else if (k->systole) {
      if (!(*k->systole > 0.0)) fail(Errc::non_positive_systole, "systole must be positive");
      report.q_threshold = detail_bound::floor_or_qfrak(*k->systole);
    } else {
      const auto it = fixtures.whitehead_systoles.find(n);
      if (it == fixtures.whitehead_systoles.end())
        fail(Errc::missing_systole,
             "no shipped systole for clasp " + std::to_string(n) + "; supply one");
      report.q_threshold = detail_bound::floor_or_qfrak(it->second);
    }
    report.provenance = "corollary_main";
    return report;
  }

  const auto& k = std::get<TwistKnot>(knot);
  if (k.sign != 1 && k.sign != -1) fail(Errc::invalid_params, "twist knot sign must be +-1");
  if (k.twists == 0)
    fail(Errc::non_hyperbolic_input, "non-hyperbolic twist knot: zero twists gives the unknot");
  if (k.twists == k.sign)
    fail(Errc::non_hyperbolic_input, "non-hyperbolic twist knot: this twist count gives a trefoil");
  if (detail::checked_abs(k.twists) <= 3) {
    report.q_threshold = BoundConstants::q_floor;
  } else {
    report.q_threshold =
        detail_bound::floor_or_qfrak(detail_bound::twist_systole(fixtures, k.sign, k.twists));
  }
  report.provenance = "corollary_new";
  return report;
}

struct SlopeCertificate {
  bool certified = false;
  BoundReport report;
  std::string reason;
};

inline SlopeCertificate is_slope_certified(const KnotClass& knot, Int p, Int q,
                                           const Fixtures& fixtures,
                                           std::optional<int> stage = std::nullopt) {
  if (std::gcd(p, q) != 1) fail(Errc::invalid_params, "p/q must be reduced");
  SlopeCertificate cert;
  cert.report = characterising_bound(knot, fixtures, stage);
  const bool q_ok = detail::checked_abs(q) >= cert.report.q_threshold;
  bool p_ok = true;
  std::string p_why;
  switch (cert.report.numerator_condition) {
    case NumeratorCondition::none:
      break;
    case NumeratorCondition::gcd_with_winding_ne_1:
      p_ok = std::gcd(p, cert.report.winding) != 1;
      p_why = "gcd(p, " + std::to_string(cert.report.winding) + ") != 1";
      break;
    case NumeratorCondition::abs_p_ne_1:
      p_ok = detail::checked_abs(p) != 1;
      p_why = "|p| != 1";
      break;
  }
  cert.certified = q_ok && p_ok;
  if (!q_ok)
    cert.reason = "|q| = " + std::to_string(detail::checked_abs(q)) + " below threshold " +
                  std::to_string(cert.report.q_threshold);
  else if (!p_ok)
    cert.reason = "numerator condition " + p_why + " fails for p = " + std::to_string(p);
  else
    cert.reason = "slope satisfies the certified condition";
  return cert;
}

// ---------------------------------------------------------------------------
// Non-characterising pairs.

/// Two knot complements glued along a torus by the map that exchanges
/// meridians and longitudes (the only gluing this construction produces).
/// The pieces form an unordered pair.
struct GluedJsjWitness {
  std::array<knots::KnotLabel, 2> pieces;

  friend bool operator==(const GluedJsjWitness&, const GluedJsjWitness&) = default;
};

inline GluedJsjWitness make_witness(knots::KnotLabel a, knots::KnotLabel b) {
  if (b.display() < a.display()) std::swap(a, b);
  return GluedJsjWitness{{std::move(a), std::move(b)}};
}

struct BrakesPair {
  knots::KnotLabel k1;
  knots::KnotLabel k2;
  GluedJsjWitness witness1;
  GluedJsjWitness witness2;
  bool non_characterising = false;
};

/// The clasped doubles W^n(T(m,q)) and W^m(T(n,q)) share their 1/q surgery:
/// both fillings decompose into the same two double-twist-knot complements
/// glued by the meridian-longitude swap. Distinct clasps give distinct
/// knots, so 1/q fails to characterise either.
inline BrakesPair brakes_pair(Int q, Int m, Int n) {
  if (q == 0 || m == 0 || n == 0) fail(Errc::zero_parameter, "q, m, n must all be nonzero");
  BrakesPair out{
      knots::KnotLabel::whitehead_double(n, 0, knots::KnotLabel::double_twist(m, q)),
      knots::KnotLabel::whitehead_double(m, 0, knots::KnotLabel::double_twist(n, q)),
      make_witness(knots::KnotLabel::double_twist(m, q), knots::KnotLabel::double_twist(n, q)),
      make_witness(knots::KnotLabel::double_twist(n, q), knots::KnotLabel::double_twist(m, q)),
      m != n};
  return out;
}

/// The four twist-box integers of one surgery-pair diagram: the shared
/// twist region, the companion twist region, the clasp box, and the box
/// compensating the companion's writhe.
struct DiagramBoxes {
  Int shared_twists = 0;
  Int companion_twists = 0;
  Int clasp = 0;
  Int writhe_box = 0;

  friend bool operator==(const DiagramBoxes&, const DiagramBoxes&) = default;
};

struct DiagramParameters {
  DiagramBoxes k1;
  DiagramBoxes k2;
};

inline DiagramParameters diagram_parameters(Int q, Int m, Int n) {
  if (q == 0 || m == 0 || n == 0) fail(Errc::zero_parameter, "q, m, n must all be nonzero");
  const auto boxes = [q](Int companion, Int clasp) {
    return DiagramBoxes{-q, -companion, -clasp,
                        detail::checked_mul(Int{-2}, detail::checked_add(companion, q))};
  };
  return DiagramParameters{boxes(m, n), boxes(n, m)};
}

}  // namespace charslope
