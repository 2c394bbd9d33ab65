#pragma once

#include <memory>
#include <string>
#include <vector>

#include "charslope/slope.hpp"

namespace charslope::knots {

/// Symbolic name of a knot. Value type; companions are shared immutable
/// subtrees. Double twist knots are normalized so that the two twist
/// parameters compare as an unordered pair, and a zero parameter collapses
/// to the unknot.
class KnotLabel {
 public:
  enum class Kind { unknot, torus, double_twist, whitehead_double, cable, opaque };

  static KnotLabel unknot() { return KnotLabel(Kind::unknot); }

  static KnotLabel torus(Int r, Int s) {
    if (std::gcd(r, s) != 1 || detail::checked_abs(r) <= 1 || detail::checked_abs(s) <= 1)
      fail(Errc::invalid_torus_params, "torus knot needs coprime |r|,|s| > 1");
    KnotLabel k(Kind::torus);
    k.a_ = r;
    k.b_ = s;
    return k;
  }

  static KnotLabel double_twist(Int m, Int t) {
    if (m == 0 || t == 0) return unknot();
    KnotLabel k(Kind::double_twist);
    k.a_ = std::min(m, t);
    k.b_ = std::max(m, t);
    return k;
  }

  /// The two-parameter family collapses to the classical twist knots when
  /// one twist region is a single clasp.
  static KnotLabel twist_knot(int sign, Int t) {
    if (sign != 1 && sign != -1) fail(Errc::invalid_params, "twist knot sign must be +-1");
    return double_twist(sign, t);
  }

  static KnotLabel whitehead_double(Int clasp, Int twist, KnotLabel companion) {
    if (clasp == 0) fail(Errc::invalid_clasp, "Whitehead double needs a nonzero clasp");
    KnotLabel k(Kind::whitehead_double);
    k.a_ = clasp;
    k.b_ = twist;
    k.companion_ = std::make_shared<const KnotLabel>(std::move(companion));
    return k;
  }

  static KnotLabel cable(Int r, Int s, KnotLabel companion) {
    if (std::gcd(r, s) != 1 || detail::checked_abs(s) <= 1)
      fail(Errc::invalid_cable_params, "cable needs gcd(r,s)=1 and |s| > 1");
    KnotLabel k(Kind::cable);
    k.a_ = r;
    k.b_ = s;
    k.companion_ = std::make_shared<const KnotLabel>(std::move(companion));
    return k;
  }

  static KnotLabel opaque(std::string name) {
    KnotLabel k(Kind::opaque);
    k.name_ = std::move(name);
    return k;
  }

  Kind kind() const { return kind_; }
  Int a() const { return a_; }
  Int b() const { return b_; }
  const std::string& name() const { return name_; }
  const KnotLabel& companion() const { return *companion_; }

  friend bool operator==(const KnotLabel& x, const KnotLabel& y) {
    if (x.kind_ != y.kind_ || x.a_ != y.a_ || x.b_ != y.b_ || x.name_ != y.name_) return false;
    if (!x.companion_ != !y.companion_) return false;
    return !x.companion_ || *x.companion_ == *y.companion_;
  }

  std::string display() const {
    switch (kind_) {
      case Kind::unknot:
        return "U";
      case Kind::torus:
        return "T(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
      case Kind::double_twist: {
        // Recognize the classical names among the double twist knots.
        if (a_ == -1 && b_ == 1) return "4_1";
        if (a_ == 1 && b_ == 1) return "3_1";
        if (a_ == -1 && b_ == -1) return "-3_1";
        if (a_ == 1 && b_ == 2) return "5_2";
        if (a_ == -2 && b_ == -1) return "-5_2";
        return "DT(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
      }
      case Kind::whitehead_double: {
        std::string head = "W^" + std::to_string(a_);
        if (b_ != 0) head += "_" + std::to_string(b_);
        return head + "(" + companion_->display() + ")";
      }
      case Kind::cable:
        return "C(" + std::to_string(a_) + "," + std::to_string(b_) + "; " + companion_->display() +
               ")";
      case Kind::opaque:
        return name_;
    }
    return {};
  }

 private:
  explicit KnotLabel(Kind kind) : kind_(kind) {}

  Kind kind_;
  Int a_ = 0;
  Int b_ = 0;
  std::string name_;
  std::shared_ptr<const KnotLabel> companion_;
};

/// Symbolic description of a closed surgered manifold.
class ClosedManifoldDesc {
 public:
  enum class Kind { lens, conn_sum, sfs_over_s2, surgered_knot, glued_pieces, s1_x_s2 };

  /// Lens parameters flip signs jointly so the first entry is nonnegative;
  /// equality reduces the second entry mod the first (so L(7,9) = L(7,2))
  /// but no lens-space homeomorphism classification is applied and mirrors
  /// stay distinct. Display keeps the constructor labels.
  static ClosedManifoldDesc lens(Int p, Int q) {
    ClosedManifoldDesc d(Kind::lens);
    if (p < 0) {
      p = detail::checked_abs(p);
      q = -q;
    }
    d.p_ = p;
    d.q_ = p == 0 ? 1 : q;
    return d;
  }

  static ClosedManifoldDesc conn_sum(std::vector<ClosedManifoldDesc> summands) {
    if (summands.empty()) fail(Errc::invalid_params, "connected sum needs at least one summand");
    ClosedManifoldDesc d(Kind::conn_sum);
    d.summands_ = std::move(summands);
    return d;
  }

  static ClosedManifoldDesc sfs_over_s2(Int f1, Int f2, Int f3) {
    ClosedManifoldDesc d(Kind::sfs_over_s2);
    d.fibers_ = {detail::checked_abs(f1), detail::checked_abs(f2), detail::checked_abs(f3)};
    return d;
  }

  static ClosedManifoldDesc surgered_knot(KnotLabel knot, Slope slope) {
    ClosedManifoldDesc d(Kind::surgered_knot);
    d.knot_ = std::make_shared<const KnotLabel>(std::move(knot));
    d.slope_ = slope;
    return d;
  }

  static ClosedManifoldDesc glued_pieces(KnotLabel complement_of, Int f1, Int f2) {
    ClosedManifoldDesc d(Kind::glued_pieces);
    d.knot_ = std::make_shared<const KnotLabel>(std::move(complement_of));
    d.fibers_ = {detail::checked_abs(f1), detail::checked_abs(f2)};
    return d;
  }

  static ClosedManifoldDesc s1_x_s2() { return ClosedManifoldDesc(Kind::s1_x_s2); }

  Kind kind() const { return kind_; }
  Int lens_p() const { return p_; }
  Int lens_q() const { return q_; }
  const std::vector<Int>& fiber_orders() const { return fibers_; }
  const std::vector<ClosedManifoldDesc>& summands() const { return summands_; }
  const KnotLabel& knot() const { return *knot_; }
  const Slope& slope() const { return slope_; }

  friend bool operator==(const ClosedManifoldDesc& x, const ClosedManifoldDesc& y) {
    if (x.kind_ != y.kind_ || x.p_ != y.p_ || x.fibers_ != y.fibers_ || x.slope_ != y.slope_ ||
        x.summands_ != y.summands_)
      return false;
    if (x.kind_ == Kind::lens && x.p_ > 0) {
      if ((x.q_ - y.q_) % x.p_ != 0) return false;
    } else if (x.q_ != y.q_) {
      return false;
    }
    if (!x.knot_ != !y.knot_) return false;
    return !x.knot_ || *x.knot_ == *y.knot_;
  }

  std::string display() const {
    switch (kind_) {
      case Kind::lens:
        return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
      case Kind::conn_sum: {
        std::string out;
        for (const auto& s : summands_) {
          if (!out.empty()) out += " # ";
          out += s.display();
        }
        return out;
      }
      case Kind::sfs_over_s2:
        return "SFS(S^2; " + std::to_string(fibers_[0]) + "," + std::to_string(fibers_[1]) + "," +
               std::to_string(fibers_[2]) + ")";
      case Kind::surgered_knot:
        return "S3_" + knot_->display() + "(" + to_string(slope_) + ")";
      case Kind::glued_pieces:
        return "S3_" + knot_->display() + " U SFS(D^2; " + std::to_string(fibers_[0]) + "," +
               std::to_string(fibers_[1]) + ")";
      case Kind::s1_x_s2:
        return "S1xS2";
    }
    return {};
  }

 private:
  explicit ClosedManifoldDesc(Kind kind) : kind_(kind) {}

  Kind kind_;
  Int p_ = 0;
  Int q_ = 0;
  std::vector<Int> fibers_;
  std::vector<ClosedManifoldDesc> summands_;
  std::shared_ptr<const KnotLabel> knot_;
  Slope slope_{0, 1};
};

/// p/q surgery on the (r,s)-torus knot: a connected sum of two lens spaces
/// at the reducible slope, a lens space at fibre distance one, and a
/// Seifert fibred space with three exceptional fibres otherwise.
inline ClosedManifoldDesc classify_torus_knot_surgery(Int r, Int s, Int p, Int q) {
  if (std::gcd(r, s) != 1 || detail::checked_abs(r) <= 1 || detail::checked_abs(s) <= 1)
    fail(Errc::invalid_torus_params, "need coprime |r|,|s| > 1");
  if (q == 0 || std::gcd(p, q) != 1) fail(Errc::invalid_torus_params, "need reduced p/q, q != 0");
  const Slope pq = make_slope(p, q);
  const Int fd = fiber_distance(pq, r, s);
  if (pq.p == detail::checked_mul(r, s) && pq.q == 1)
    return ClosedManifoldDesc::conn_sum(
        {ClosedManifoldDesc::lens(r, s), ClosedManifoldDesc::lens(s, r)});
  if (fd == 1) {
    // Reduce the lens parameter for display; equality would not care.
    const Int abs_p = detail::checked_abs(pq.p);
    Int qs2 = detail::checked_mul(pq.q, detail::checked_mul(s, s));
    if (abs_p > 0) qs2 = ((qs2 % abs_p) + abs_p) % abs_p;
    return ClosedManifoldDesc::lens(pq.p, qs2);
  }
  return ClosedManifoldDesc::sfs_over_s2(r, s, fd);
}

/// p/q surgery on the (r,s)-cable of a companion: the cable space either
/// splits off a lens space, compresses onto the companion with the slope
/// pushed down by s^2, or survives as a Seifert fibred piece glued to the
/// companion complement.
inline ClosedManifoldDesc classify_cable_surgery(Int r, Int s, Int p, Int q,
                                                 const KnotLabel& companion) {
  if (std::gcd(r, s) != 1 || detail::checked_abs(s) <= 1)
    fail(Errc::invalid_cable_params, "need gcd(r,s)=1 and |s| > 1");
  if (q == 0 || std::gcd(p, q) != 1) fail(Errc::invalid_cable_params, "need reduced p/q, q != 0");
  const Slope pq = make_slope(p, q);
  const Int fd = fiber_distance(pq, r, s);
  if (pq.p == detail::checked_mul(r, s) && pq.q == 1)
    return ClosedManifoldDesc::conn_sum(
        {ClosedManifoldDesc::surgered_knot(companion, make_slope(r, s)),
         ClosedManifoldDesc::lens(s, r)});
  if (fd == 1) return ClosedManifoldDesc::surgered_knot(companion, cable_pushdown(pq, s));
  return ClosedManifoldDesc::glued_pieces(companion, s, fd);
}

/// True when p/q and p/(q*s^2) are distinct even up to mirroring, so the
/// cable and its companion can never share that surgery. Holds whenever
/// p != 0, hence always at fibre distance one.
inline bool cosmetic_obstruction(Int p, Int q, Int s) {
  if (detail::checked_abs(s) <= 1) fail(Errc::invalid_params, "need |s| > 1");
  if (q == 0 || std::gcd(p, q) != 1) fail(Errc::invalid_params, "need reduced p/q, q != 0");
  const Slope a = make_slope(p, q);
  return !slopes_equal_up_to_sign(a, cable_pushdown(a, s));
}

/// Whether p/q can be at fibre distance one from the regular fibres of an
/// (r,s)-cable space and simultaneously from those of an iterated
/// (r2,s2)-cable below it. The distance chain forces r = r2*s2*s against
/// gcd(r,s)=1, so under the preconditions this is always false; the
/// operation exists to machine-check that chain on concrete inputs.
inline bool can_iterate_cable(Int p, Int q, Int r, Int s, Int r2, Int s2) {
  if (detail::checked_abs(q) < 3 || detail::checked_abs(s) < 2 || detail::checked_abs(s2) < 2 ||
      std::gcd(p, q) != 1 || std::gcd(r, s) != 1 || std::gcd(r2, s2) != 1)
    fail(Errc::invalid_params, "need |q| >= 3, |s|,|s2| >= 2, reduced parameter pairs");
  const Int outer = detail::checked_abs(detail::checked_sub(p, detail::checked_mul(q, detail::checked_mul(r, s))));
  const Int inner_fiber = detail::checked_mul(r2, detail::checked_mul(s2, detail::checked_mul(s, s)));
  const Int inner = detail::checked_abs(detail::checked_sub(p, detail::checked_mul(q, inner_fiber)));
  return outer == 1 && inner == 1;
}

/// Filling the unknotted component of the n-clasped Whitehead link along
/// 1/q turns the other component into the (n,q)-double twist knot.
inline KnotLabel whitehead_fill_identity(Int n, Int q) {
  if (n == 0) fail(Errc::invalid_clasp, "clasp parameter must be nonzero");
  return KnotLabel::double_twist(n, q);
}

/// The double twist parameters are interchangeable; normalization makes the
/// two orderings compare equal.
inline bool double_twist_symmetric(Int m, Int q) {
  return KnotLabel::double_twist(m, q) == KnotLabel::double_twist(q, m);
}

}  // namespace charslope::knots
