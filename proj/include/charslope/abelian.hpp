#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "charslope/slope.hpp"

namespace charslope {

/// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}
  IntMatrix(int r, int c, std::vector<Int> e) : rows(r), cols(c), entries(std::move(e)) {}

  Int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  Int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

/// Smith normal form diagonal d_1,...,d_k (k = min(rows, cols)), d_i >= 0,
/// d_i | d_{i+1}. Elementary row/column reduction pivoting on the minimal
/// nonzero absolute value; matrices in this project are tiny.
inline std::vector<Int> smith_normal_form(IntMatrix m) {
  const int n = std::min(m.rows, m.cols);
  std::vector<Int> diag(static_cast<std::size_t>(n), 0);

  for (int t = 0; t < n; ++t) {
    // Pick the nonzero entry of smallest |value| in the trailing block.
    int pr = -1, pc = -1;
    for (int r = t; r < m.rows; ++r)
      for (int c = t; c < m.cols; ++c) {
        const Int e = m.at(r, c);
        if (e != 0 && (pr < 0 || detail::checked_abs(e) < detail::checked_abs(m.at(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing block is zero; remaining diagonal entries stay 0

    for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

    bool reduced = false;
    while (!reduced) {
      reduced = true;
      for (int r = t + 1; r < m.rows; ++r) {
        while (m.at(r, t) != 0) {
          const Int f = m.at(r, t) / m.at(t, t);
          for (int c = t; c < m.cols; ++c)
            m.at(r, c) = detail::checked_sub(m.at(r, c), detail::checked_mul(f, m.at(t, c)));
          if (m.at(r, t) != 0) {  // remainder is a smaller pivot
            for (int c = t; c < m.cols; ++c) std::swap(m.at(t, c), m.at(r, c));
            reduced = false;
          }
        }
      }
      for (int c = t + 1; c < m.cols; ++c) {
        while (m.at(t, c) != 0) {
          const Int f = m.at(t, c) / m.at(t, t);
          for (int r = t; r < m.rows; ++r)
            m.at(r, c) = detail::checked_sub(m.at(r, c), detail::checked_mul(f, m.at(r, t)));
          if (m.at(t, c) != 0) {
            for (int r = t; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, c));
            reduced = false;
          }
        }
      }
      if (reduced) {
        // Pivot must divide the whole trailing block for the divisor chain.
        for (int r = t + 1; r < m.rows && reduced; ++r)
          for (int c = t + 1; c < m.cols && reduced; ++c)
            if (m.at(r, c) % m.at(t, t) != 0) {
              for (int cc = t; cc < m.cols; ++cc)
                m.at(t, cc) = detail::checked_add(m.at(t, cc), m.at(r, cc));
              reduced = false;
            }
      }
    }
    diag[static_cast<std::size_t>(t)] = detail::checked_abs(m.at(t, t));
  }
  return diag;
}

/// Finitely generated abelian group: free rank plus a torsion divisor chain.
/// Constructed values are always canonical (chain sorted, entries >= 2).
struct FgAbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

inline FgAbelianGroup make_group(int rank, std::vector<Int> torsion) {
  for (Int& t : torsion) t = detail::checked_abs(t);
  // Fold arbitrary factors into a divisor chain via gcd/lcm exchanges.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < torsion.size(); ++i)
      for (std::size_t j = i + 1; j < torsion.size(); ++j) {
        if (torsion[i] == 0 || torsion[j] == 0) continue;
        if (torsion[j] % torsion[i] != 0) {
          const Int g = std::gcd(torsion[i], torsion[j]);
          const Int l = detail::checked_mul(torsion[i] / g, torsion[j]);
          torsion[i] = g;
          torsion[j] = l;
          changed = true;
        }
      }
    std::sort(torsion.begin(), torsion.end());
  }
  // Z/0 contributes free rank, Z/1 is trivial.
  rank += static_cast<int>(std::count(torsion.begin(), torsion.end(), Int{0}));
  std::erase_if(torsion, [](Int t) { return t <= 1; });
  return FgAbelianGroup{rank, std::move(torsion)};
}

inline FgAbelianGroup group_from_diagonal(const std::vector<Int>& diag, int extra_free) {
  return make_group(extra_free, diag);
}

inline bool is_finite(const FgAbelianGroup& g) { return g.rank == 0; }

/// Order of the group; nullopt when infinite.
inline std::optional<Int> order(const FgAbelianGroup& g) {
  if (!is_finite(g)) return std::nullopt;
  Int n = 1;
  for (Int t : g.torsion) n = detail::checked_mul(n, t);
  return n;
}

inline std::string to_string(const FgAbelianGroup& g) {
  std::string out;
  if (g.rank > 0) out = "Z^" + std::to_string(g.rank);
  for (Int t : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

/// First homology of p/q surgery on a satellite with pattern winding number w:
/// Z + Z/gcd(p,w), where Z/0 contributes a second free factor.
inline FgAbelianGroup h1_knot_filling(Int p, Int w) {
  return make_group(1, {std::gcd(p, w)});
}

/// Slope of the nullhomologous curve on the boundary of the filled pattern
/// piece: p/(q*w^2) for w != 0, the meridian 1/0 for w = 0.
inline Slope nullhomologous_boundary_slope(Int p, Int q, Int w) {
  if (std::gcd(p, q) != 1) fail(Errc::invalid_params, "p/q must be reduced");
  if (w == 0) return infinity_slope();
  return make_slope(p, detail::checked_mul(q, detail::checked_mul(w, w)));
}

/// Filling data for a 2-component link with linking number w. An absent
/// slope leaves that component unfilled; 1/0 fills along the meridian.
struct FilledLinkSpec {
  Int winding = 0;
  std::optional<Slope> slope1;
  std::optional<Slope> slope2;
};

/// H_1 of the filled link complement. Generators are the two meridians;
/// filling component 1 along p1/q1 imposes p1*m1 + q1*w*m2 = 0, and
/// component 2 along p2/q2 imposes q2*w*m1 + p2*m2 = 0.
inline FgAbelianGroup h1_link_filling(const FilledLinkSpec& spec) {
  std::vector<Int> rows;
  if (spec.slope1) {
    rows.push_back(spec.slope1->p);
    rows.push_back(detail::checked_mul(spec.slope1->q, spec.winding));
  }
  if (spec.slope2) {
    rows.push_back(detail::checked_mul(spec.slope2->q, spec.winding));
    rows.push_back(spec.slope2->p);
  }
  const int nrel = static_cast<int>(rows.size() / 2);
  IntMatrix m(nrel, 2, std::move(rows));
  return group_from_diagonal(smith_normal_form(m), 2 - std::min(nrel, 2));
}

}  // namespace charslope
