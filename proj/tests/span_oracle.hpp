#pragma once

// Brute-force oracle for the bigraded pieces of the initial-form ideal,
// written against the library's closed-form classification.  Everything here
// is generic linear algebra over the fiber: no reuse of the library's piece
// logic or its rank routines.
//
// Model: the S-degree-b slice of the toric ideal is the coefficient-sum-zero
// subspace of the span of the fiber V(b) (differences of fiber monomials).
// The initial form of an element is its lowest-total-degree homogeneous
// component, so the bidegree-(b, d) piece of the initial-form ideal is
//
//   { f_d : f in the slice, all components of total degree < d vanish }.
//
// With fiber coordinates ordered by ascending total degree, that piece's
// dimension is rank(columns of degree <= d) - rank(columns of degree < d)
// of any row basis of the slice, and the quotient dimension at (b, d) is the
// number of degree-d fiber monomials minus the piece dimension.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "oracles.hpp"

namespace span_oracle {

using Int = oracle::Int;

/// Fraction-free Gaussian elimination rank; entries stay integral (Bareiss),
/// and for the +-1 incidence-style rows used here they stay far below the
/// __int128 range.
inline int rank_i128(std::vector<std::vector<__int128>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const int nr = static_cast<int>(a.size()), nc = static_cast<int>(a[0].size());
  int rank = 0;
  __int128 prev = 1;
  for (int c = 0; c < nc && rank < nr; ++c) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < nr; ++r) {
      for (int cc = c + 1; cc < nc; ++cc)
        a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

struct PieceDims {
  Int ambient = 0;   // number of degree-d monomials in the fiber
  Int piece = 0;     // dim of the (b, d) piece of the initial-form ideal
  Int quotient = 0;  // ambient - piece
};

/// All bidegree pieces at S-degree b, keyed by total degree d.  Degrees with
/// no fiber monomials are omitted (ambient 0 there).
inline std::map<Int, PieceDims> quotient_piece_dims(const std::vector<Int>& gens, Int b) {
  std::map<Int, PieceDims> out;
  auto fib = oracle::factorizations(gens, b);
  if (fib.empty()) return out;

  // Sort fiber coordinates by (total degree, exponent vector).
  std::vector<std::pair<Int, std::vector<Int>>> cols;
  for (auto& w : fib) {
    Int deg = 0;
    for (Int e : w.v) deg += e;
    cols.emplace_back(deg, w.v);
  }
  std::sort(cols.begin(), cols.end());

  const int r = static_cast<int>(cols.size());
  // Row basis of the sum-zero slice: e_j - e_0.
  std::vector<std::vector<__int128>> rows;
  for (int j = 1; j < r; ++j) {
    std::vector<__int128> row(static_cast<std::size_t>(r), 0);
    row[static_cast<std::size_t>(j)] = 1;
    row[0] = -1;
    rows.push_back(std::move(row));
  }

  auto rank_prefix = [&](int ncols) {
    if (ncols <= 0 || rows.empty()) return 0;
    std::vector<std::vector<__int128>> sub;
    for (auto& row : rows) sub.emplace_back(row.begin(), row.begin() + ncols);
    return rank_i128(std::move(sub));
  };

  for (int j = 0; j < r;) {
    Int d = cols[static_cast<std::size_t>(j)].first;
    int hi = j;
    while (hi < r && cols[static_cast<std::size_t>(hi)].first == d) ++hi;
    PieceDims pd;
    pd.ambient = hi - j;
    pd.piece = rank_prefix(hi) - rank_prefix(j);
    pd.quotient = pd.ambient - pd.piece;
    out[d] = pd;
    j = hi;
  }
  return out;
}

}  // namespace span_oracle
