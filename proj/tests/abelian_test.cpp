#include "charslope/abelian.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <functional>
#include <random>

namespace charslope {
namespace {

// Independent oracle: d_1*...*d_k equals the gcd of all k x k minors.
Int det(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int n = static_cast<int>(rows.size());
  if (n == 1) return m.at(rows[0], cols[0]);
  Int sum = 0;
  Int sign = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (int j = 0; j < n; ++j)
      if (j != i) sub_cols.push_back(cols[j]);
    sum += sign * m.at(rows[0], cols[i]) * det(m, sub_rows, sub_cols);
    sign = -sign;
  }
  return sum;
}

void combinations(int n, int k, int start, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, fn);
    cur.pop_back();
  }
}

std::vector<Int> snf_by_minor_gcds(const IntMatrix& m) {
  const int n = std::min(m.rows, m.cols);
  std::vector<Int> dk(n + 1, 0);
  dk[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Int g = 0;
    std::vector<int> rows_sel, cols_sel;
    combinations(m.rows, k, 0, rows_sel, [&](const std::vector<int>& rs) {
      std::vector<int> cs;
      combinations(m.cols, k, 0, cs, [&](const std::vector<int>& csel) {
        g = std::gcd(g, det(m, rs, csel));
      });
    });
    dk[k] = g;
  }
  std::vector<Int> diag(n, 0);
  for (int k = 1; k <= n; ++k) diag[k - 1] = dk[k] == 0 ? 0 : dk[k] / dk[k - 1];
  return diag;
}

TEST(SmithNormalForm, FrozenSmallCases) {
  // diag(2,3): d1 = gcd of entries = 1, d1*d2 = gcd of 2x2 minors = 6.
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 2, {2, 0, 0, 3})), (std::vector<Int>{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 2, {0, 0, 0, 0})), (std::vector<Int>{0, 0}));
  EXPECT_EQ(smith_normal_form(IntMatrix(1, 1, {-7})), (std::vector<Int>{7}));
  EXPECT_EQ(smith_normal_form(IntMatrix(1, 1, {0})), (std::vector<Int>{0}));
}

TEST(SmithNormalForm, MatchesMinorGcdOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 3000; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (Int& e : m.entries) e = entry(rng);
    const auto got = smith_normal_form(m);
    const auto expected = snf_by_minor_gcds(m);
    ASSERT_EQ(got, expected) << "rows=" << m.rows << " cols=" << m.cols;
  }
}

TEST(SmithNormalForm, DivisorChainAndDeterminant) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<Int> entry(-9, 9);
  for (int trial = 0; trial < 2000; ++trial) {
    IntMatrix m(3, 3);
    for (Int& e : m.entries) e = entry(rng);
    const auto d = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i] == 0) {
        EXPECT_EQ(d[i + 1], 0);
      } else {
        EXPECT_EQ(d[i + 1] % d[i], 0);
      }
    }
    const Int determinant = det(m, {0, 1, 2}, {0, 1, 2});
    if (determinant != 0) {
      EXPECT_EQ(d[0] * d[1] * d[2], std::abs(determinant));
    }
  }
}

TEST(GroupFromDiagonal, CanonicalForms) {
  EXPECT_EQ(group_from_diagonal({1, 6}, 0), make_group(0, {6}));
  EXPECT_EQ(group_from_diagonal({0}, 1), make_group(2, {}));
  EXPECT_EQ(group_from_diagonal({2, 0}, 0), make_group(1, {2}));
}

TEST(MakeGroup, NormalizesToDivisorChain) {
  // 2 and 3 fold into 6; 4 and 6 fold into 2, 12.
  EXPECT_EQ(make_group(0, {2, 3}).torsion, (std::vector<Int>{6}));
  EXPECT_EQ(make_group(0, {4, 6}).torsion, (std::vector<Int>{2, 12}));
  EXPECT_EQ(make_group(0, {6, 4}).torsion, (std::vector<Int>{2, 12}));
  EXPECT_EQ(make_group(0, {1, 1, 5}).torsion, (std::vector<Int>{5}));
  EXPECT_EQ(make_group(1, {0}).rank, 2);
}

TEST(GroupOrder, FiniteAndInfinite) {
  EXPECT_TRUE(is_finite(make_group(0, {2})));
  EXPECT_EQ(order(make_group(0, {2})), 2);
  EXPECT_FALSE(is_finite(make_group(1, {})));
  EXPECT_EQ(order(make_group(1, {})), std::nullopt);
  EXPECT_EQ(order(make_group(0, {})), 1);
}

TEST(GroupFormat, Serialization) {
  EXPECT_EQ(to_string(make_group(1, {2})), "Z^1 + Z/2");
  EXPECT_EQ(to_string(make_group(0, {})), "0");
  EXPECT_EQ(to_string(make_group(2, {})), "Z^2");
  EXPECT_EQ(to_string(make_group(0, {2, 6})), "Z/2 + Z/6");
}

TEST(H1KnotFilling, GcdFormula) {
  EXPECT_EQ(h1_knot_filling(6, 3), make_group(1, {3}));
  EXPECT_EQ(h1_knot_filling(5, 0), make_group(1, {5}));
  EXPECT_EQ(h1_knot_filling(5, 3), make_group(1, {}));
  EXPECT_EQ(h1_knot_filling(0, 0), make_group(2, {}));  // Z/0 is a free factor
  // The group departs from Z exactly when gcd(p, w) != 1.
  for (Int p = -20; p <= 20; ++p)
    for (Int w = -10; w <= 10; ++w) {
      const FgAbelianGroup g = h1_knot_filling(p, w);
      EXPECT_EQ(!g.torsion.empty() || g.rank > 1, std::gcd(p, w) != 1)
          << "p=" << p << " w=" << w;
    }
}

TEST(NullhomologousBoundarySlope, GordonFormula) {
  EXPECT_EQ(nullhomologous_boundary_slope(3, 1, 2), make_slope(3, 4));
  EXPECT_EQ(nullhomologous_boundary_slope(3, 1, 0), infinity_slope());
  EXPECT_EQ(nullhomologous_boundary_slope(0, 1, 5), make_slope(0, 1));
  EXPECT_EQ(nullhomologous_boundary_slope(6, 1, 3), make_slope(2, 3));
  EXPECT_THROW(nullhomologous_boundary_slope(4, 2, 1), Error);
}

TEST(H1LinkFilling, FrozenCases) {
  // Winding zero decouples the filled coefficients.
  EXPECT_EQ(h1_link_filling({0, make_slope(3, 1), make_slope(5, 2)}), make_group(0, {3, 5}));
  // Meridian fill kills one generator, 0/1 fill leaves the other free.
  EXPECT_EQ(h1_link_filling({0, infinity_slope(), make_slope(0, 1)}), make_group(1, {}));
  // SNF of [[1,1],[1,1]].
  EXPECT_EQ(h1_link_filling({1, make_slope(1, 1), make_slope(1, 1)}), make_group(1, {}));
  // Nothing filled: free on the two meridians.
  EXPECT_EQ(h1_link_filling({3, std::nullopt, std::nullopt}), make_group(2, {}));
}

TEST(H1LinkFilling, AgreesWithKnotFillingOnOneComponent) {
  for (Int p = -20; p <= 20; ++p)
    for (Int q = -20; q <= 20; ++q) {
      if ((p == 0 && q == 0) || std::gcd(p, q) != 1) continue;
      for (Int w = -10; w <= 10; ++w) {
        const FilledLinkSpec one{w, make_slope(p, q), std::nullopt};
        EXPECT_EQ(h1_link_filling(one), h1_knot_filling(p, w))
            << "p=" << p << " q=" << q << " w=" << w;
      }
    }
}

TEST(H1LinkFilling, WindingZeroDecouplesExhaustively) {
  for (Int p1 = -12; p1 <= 12; ++p1)
    for (Int p2 = -12; p2 <= 12; ++p2)
      for (Int q1 = 0; q1 <= 5; ++q1)
        for (Int q2 = 0; q2 <= 5; ++q2) {
          if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
          if (std::gcd(p1, q1) != 1 || std::gcd(p2, q2) != 1) continue;
          const FilledLinkSpec spec{0, make_slope(p1, q1), make_slope(p2, q2)};
          EXPECT_EQ(h1_link_filling(spec), make_group(0, {std::abs(p1), std::abs(p2)}));
        }
}

TEST(H1LinkFilling, MatchesBruteForceSnfOnRandomInputs) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Int> pq(-20, 20), wd(-10, 10);
  int done = 0;
  while (done < 1000) {
    const Int p1 = pq(rng), q1 = pq(rng), p2 = pq(rng), q2 = pq(rng), w = wd(rng);
    if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
    if (std::gcd(p1, q1) != 1 || std::gcd(p2, q2) != 1) continue;
    ++done;
    const Slope s1 = make_slope(p1, q1), s2 = make_slope(p2, q2);
    const IntMatrix presentation(2, 2, {s1.p, s1.q * w, s2.q * w, s2.p});
    const auto diag = snf_by_minor_gcds(presentation);
    EXPECT_EQ(h1_link_filling({w, s1, s2}), group_from_diagonal(diag, 0));
  }
}

}  // namespace
}  // namespace charslope
