#include "charslope/classify.hpp"

#include <gtest/gtest.h>

#include <random>

namespace charslope::knots {
namespace {

using Desc = ClosedManifoldDesc;

TEST(TorusKnotSurgery, ReducibleSlope) {
  const Desc d = classify_torus_knot_surgery(2, 3, 6, 1);
  ASSERT_EQ(d.kind(), Desc::Kind::conn_sum);
  EXPECT_EQ(d.display(), "L(2,3) # L(3,2)");
}

TEST(TorusKnotSurgery, LensSlope) {
  EXPECT_EQ(classify_torus_knot_surgery(2, 3, 7, 1), Desc::lens(7, 2));
  EXPECT_EQ(classify_torus_knot_surgery(2, 3, 7, 1).display(), "L(7,2)");
  EXPECT_EQ(classify_torus_knot_surgery(2, 3, 5, 1), Desc::lens(5, 9 % 5));
}

TEST(TorusKnotSurgery, SeifertFibered) {
  const Desc d = classify_torus_knot_surgery(2, 3, 1, 2);
  EXPECT_EQ(d, Desc::sfs_over_s2(2, 3, 11));
  EXPECT_EQ(d.display(), "SFS(S^2; 2,3,11)");
}

TEST(TorusKnotSurgery, RejectsBadParameters) {
  EXPECT_THROW(classify_torus_knot_surgery(2, 4, 7, 1), Error);   // gcd(r,s) != 1
  EXPECT_THROW(classify_torus_knot_surgery(1, 3, 7, 1), Error);   // |r| <= 1
  EXPECT_THROW(classify_torus_knot_surgery(2, 3, 7, 0), Error);   // q = 0
  EXPECT_THROW(classify_torus_knot_surgery(2, 3, 6, 4), Error);   // gcd(p,q) != 1
}

TEST(CableSurgery, ReducibleSlope) {
  const Desc d = classify_cable_surgery(2, 3, 6, 1, KnotLabel::opaque("C"));
  EXPECT_EQ(d.display(), "S3_C(2/3) # L(3,2)");
}

TEST(CableSurgery, CompressingSlope) {
  const Desc d = classify_cable_surgery(2, 3, 13, 2, KnotLabel::opaque("C"));
  EXPECT_EQ(d, Desc::surgered_knot(KnotLabel::opaque("C"), make_slope(13, 18)));
  EXPECT_EQ(d.display(), "S3_C(13/18)");
}

TEST(CableSurgery, GluedSeifertPiece) {
  const Desc d = classify_cable_surgery(2, 3, 1, 1, KnotLabel::opaque("C"));
  EXPECT_EQ(d, Desc::glued_pieces(KnotLabel::opaque("C"), 3, 5));
  EXPECT_EQ(d.display(), "S3_C U SFS(D^2; 3,5)");
}

TEST(CableSurgery, AllowsUnitR) {
  // Cables with |r| = 1 are legitimate patterns; only |s| > 1 is required.
  EXPECT_NO_THROW(classify_cable_surgery(1, 2, 3, 1, KnotLabel::unknot()));
  EXPECT_THROW(classify_cable_surgery(2, 1, 3, 1, KnotLabel::unknot()), Error);
  EXPECT_THROW(classify_cable_surgery(2, 4, 3, 1, KnotLabel::unknot()), Error);
}

// Dual-route check: on the unknot companion the cable classification
// collapses to the torus-knot classification in the lens and connected-sum
// branches.
Desc reduce_unknot_surgeries(const Desc& d) {
  if (d.kind() == Desc::Kind::surgered_knot && d.knot() == KnotLabel::unknot())
    return Desc::lens(d.slope().p, d.slope().q);
  if (d.kind() == Desc::Kind::conn_sum) {
    std::vector<Desc> parts;
    for (const auto& s : d.summands()) parts.push_back(reduce_unknot_surgeries(s));
    return Desc::conn_sum(std::move(parts));
  }
  return d;
}

Int h1_order_of(const Desc& d) {
  switch (d.kind()) {
    case Desc::Kind::lens:
      return d.lens_p();
    case Desc::Kind::conn_sum: {
      Int n = 1;
      for (const auto& s : d.summands()) n *= h1_order_of(s);
      return n;
    }
    default:
      ADD_FAILURE() << "order queried outside the lens/sum branches";
      return -1;
  }
}

TEST(ClassifierCoherence, UnknotCompanionMatchesTorusOnSmallBox) {
  int lens_cases = 0, sum_cases = 0;
  for (Int r = -5; r <= 5; ++r)
    for (Int s = -5; s <= 5; ++s) {
      if (std::abs(r) <= 1 || std::abs(s) <= 1 || std::gcd(r, s) != 1) continue;
      for (Int p = -30; p <= 30; ++p)
        for (Int q = 1; q <= 30; ++q) {
          if (std::gcd(p, q) != 1) continue;
          const bool reducible = (p == r * s && q == 1);
          const bool lens = std::abs(p - q * r * s) == 1;
          if (!reducible && !lens) continue;
          const Desc from_cable =
              reduce_unknot_surgeries(classify_cable_surgery(r, s, p, q, KnotLabel::unknot()));
          const Desc from_torus = classify_torus_knot_surgery(r, s, p, q);
          ASSERT_EQ(from_cable, from_torus) << "r=" << r << " s=" << s << " p=" << p << " q=" << q;
          ASSERT_EQ(h1_order_of(from_torus), std::abs(p));
          (reducible ? sum_cases : lens_cases)++;
        }
    }
  EXPECT_GT(lens_cases, 100);
  EXPECT_GT(sum_cases, 10);
}

TEST(CosmeticObstruction, Examples) {
  EXPECT_TRUE(cosmetic_obstruction(7, 1, 3));
  EXPECT_TRUE(cosmetic_obstruction(1, 35, 2));
  EXPECT_THROW(cosmetic_obstruction(5, 1, 1), Error);
  EXPECT_THROW(cosmetic_obstruction(5, 1, 0), Error);
  EXPECT_THROW(cosmetic_obstruction(4, 2, 3), Error);
  // Degenerate numerator: 0/1 pushes down to itself.
  EXPECT_FALSE(cosmetic_obstruction(0, 1, 2));
}

TEST(CosmeticObstruction, HoldsForAllNonzeroNumerators) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<Int> coeff(-200, 200), winding(2, 20);
  int done = 0;
  while (done < 5000) {
    const Int p = coeff(rng), q = coeff(rng);
    if (p == 0 || q == 0 || std::gcd(p, q) != 1) continue;
    Int s = winding(rng);
    if (done % 2) s = -s;
    EXPECT_TRUE(cosmetic_obstruction(p, q, s)) << p << "/" << q << " s=" << s;
    ++done;
  }
}

TEST(CanIterateCable, SpotChecksAndErrors) {
  EXPECT_FALSE(can_iterate_cable(13, 3, 2, 3, 1, 2));
  // Outer fibre distance one, inner far away.
  EXPECT_FALSE(can_iterate_cable(7, 3, 1, 2, 1, 2));
  EXPECT_FALSE(can_iterate_cable(17, 3, 3, 2, 1, 3));
  EXPECT_THROW(can_iterate_cable(7, 2, 3, 2, 1, 3), Error);   // |q| < 3
  EXPECT_THROW(can_iterate_cable(7, 3, 3, 1, 1, 3), Error);   // |s| < 2
  EXPECT_THROW(can_iterate_cable(7, 3, 3, 2, 1, 1), Error);   // |s2| < 2
  EXPECT_THROW(can_iterate_cable(6, 3, 3, 2, 1, 2), Error);   // gcd(p,q) != 1
  EXPECT_THROW(can_iterate_cable(7, 3, 2, 2, 1, 2), Error);   // gcd(r,s) != 1
  EXPECT_THROW(can_iterate_cable(7, 3, 3, 2, 2, 2), Error);   // gcd(r2,s2) != 1
}

TEST(CanIterateCable, FalseOnSampledBox) {
  // The acceptance suite runs the exhaustive scan; sample here.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Int> pd(-50, 50), qd(3, 50), rd(-10, 10);
  const Int svals[] = {-4, -3, -2, 2, 3, 4};
  std::uniform_int_distribution<int> sd(0, 5);
  int done = 0;
  while (done < 20000) {
    const Int p = pd(rng);
    Int q = qd(rng);
    if (done % 2) q = -q;
    const Int r = rd(rng), r2 = rd(rng), s = svals[sd(rng)], s2 = svals[sd(rng)];
    if (std::gcd(p, q) != 1 || std::gcd(r, s) != 1 || std::gcd(r2, s2) != 1) continue;
    EXPECT_FALSE(can_iterate_cable(p, q, r, s, r2, s2));
    ++done;
  }
}

TEST(WhiteheadFillIdentity, ProducesDoubleTwistKnots) {
  EXPECT_EQ(whitehead_fill_identity(1, -1), KnotLabel::double_twist(1, -1));
  EXPECT_EQ(whitehead_fill_identity(1, -1).display(), "4_1");
  EXPECT_EQ(whitehead_fill_identity(1, 1).display(), "3_1");
  EXPECT_EQ(whitehead_fill_identity(-1, -1).display(), "-3_1");
  EXPECT_EQ(whitehead_fill_identity(3, 0), KnotLabel::unknot());
  EXPECT_EQ(whitehead_fill_identity(1, -1), KnotLabel::twist_knot(+1, -1));
  try {
    whitehead_fill_identity(0, 5);
    FAIL() << "expected InvalidClasp";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_clasp);
  }
}

TEST(DoubleTwist, SymmetricInItsParameters) {
  EXPECT_TRUE(double_twist_symmetric(2, 3));
  EXPECT_TRUE(double_twist_symmetric(1, -1));
  EXPECT_FALSE(KnotLabel::double_twist(2, 3) == KnotLabel::double_twist(2, 4));
  for (Int m = -6; m <= 6; ++m)
    for (Int q = -6; q <= 6; ++q) EXPECT_TRUE(double_twist_symmetric(m, q));
}

TEST(KnotLabel, DisplayAndEquality) {
  EXPECT_EQ(KnotLabel::unknot().display(), "U");
  EXPECT_EQ(KnotLabel::torus(2, 3).display(), "T(2,3)");
  EXPECT_EQ(KnotLabel::double_twist(2, 3).display(), "DT(2,3)");
  EXPECT_EQ(KnotLabel::twist_knot(+1, 2).display(), "5_2");
  EXPECT_EQ(KnotLabel::twist_knot(-1, -2).display(), "-5_2");
  const KnotLabel wd = KnotLabel::whitehead_double(2, -1, KnotLabel::torus(2, 3));
  EXPECT_EQ(wd.display(), "W^2_-1(T(2,3))");
  EXPECT_EQ(KnotLabel::whitehead_double(1, 0, KnotLabel::double_twist(-1, 1)).display(),
            "W^1(4_1)");
  EXPECT_EQ(wd, KnotLabel::whitehead_double(2, -1, KnotLabel::torus(2, 3)));
  EXPECT_FALSE(wd == KnotLabel::whitehead_double(2, 0, KnotLabel::torus(2, 3)));
  EXPECT_EQ(KnotLabel::cable(1, 2, KnotLabel::opaque("C")).display(), "C(1,2; C)");
  EXPECT_FALSE(KnotLabel::torus(2, 3) == KnotLabel::double_twist(2, 3));
}

TEST(LensNormalization, ModularParameterAndJointSigns) {
  EXPECT_EQ(Desc::lens(7, 9), Desc::lens(7, 2));
  EXPECT_EQ(Desc::lens(7, -5), Desc::lens(7, 2));
  EXPECT_EQ(Desc::lens(-7, -9), Desc::lens(7, 2));
  // Flipping one sign mirrors the space; mirrors stay distinct.
  EXPECT_FALSE(Desc::lens(-7, 9) == Desc::lens(7, 9));
  // No lens-space homeomorphism classification: L(7,2) and L(7,3) differ.
  EXPECT_FALSE(Desc::lens(7, 2) == Desc::lens(7, 3));
  EXPECT_EQ(Desc::lens(2, 3).display(), "L(2,3)");
  EXPECT_EQ(Desc::lens(-2, -3).display(), "L(2,3)");
}

}  // namespace
}  // namespace charslope::knots
