#include "liftlab/betti.hpp"

#include <algorithm>
#include <bit>

#include "liftlab/exact_linalg.hpp"
#include "liftlab/toric.hpp"

namespace liftlab {

namespace {

// Lex order on the ascending vertex lists of two masks: the lowest bit where
// they differ decides (present beats absent).
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  std::uint32_t d = a ^ b;
  if (d == 0) return false;
  std::uint32_t low = d & (~d + 1);
  return (a & low) != 0;
}

}  // namespace

DivisorComplex divisor_complex(const NumericalSemigroup& S, Int b) {
  if (S.ngens() > 24) fail(Err::Overflow, "too many generators for face scan");
  DivisorComplex C;
  C.degree = b;
  C.nvars = S.ngens();
  const auto& g = S.generators();
  std::uint32_t full = (1u << S.ngens()) - 1u;
  for (std::uint32_t F = 0; F <= full; ++F) {
    Int c = b;
    for (int i = 0; i < S.ngens(); ++i)
      if (F & (1u << i)) c -= g[static_cast<std::size_t>(i)];
    if (c >= 0 && S.contains(c)) C.faces.push_back(F);
  }
  std::sort(C.faces.begin(), C.faces.end(), [](std::uint32_t a, std::uint32_t b2) {
    int pa = std::popcount(a), pb = std::popcount(b2);
    if (pa != pb) return pa < pb;
    return mask_lex_less(a, b2);
  });
  return C;
}

std::vector<Int> reduced_homology_ranks(const DivisorComplex& C) {
  int n = C.nvars;
  // Faces per cardinality, in the stored (lex) order.
  std::vector<std::vector<std::uint32_t>> level(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t F : C.faces)
    level[static_cast<std::size_t>(std::popcount(F))].push_back(F);

  // rank of the boundary map from cardinality j to cardinality j-1
  std::vector<int> brank(static_cast<std::size_t>(n) + 2, 0);
  for (int j = 1; j <= n; ++j) {
    const auto& src = level[static_cast<std::size_t>(j)];
    const auto& dst = level[static_cast<std::size_t>(j) - 1];
    if (src.empty() || dst.empty()) continue;
    std::vector<std::vector<Int>> rows(src.size(), std::vector<Int>(dst.size(), 0));
    for (std::size_t cidx = 0; cidx < src.size(); ++cidx) {
      std::uint32_t F = src[cidx];
      int pos = 0;
      for (int v = 0; v < n; ++v) {
        if (!(F & (1u << v))) continue;
        std::uint32_t sub = F & ~(1u << v);
        auto it = std::lower_bound(dst.begin(), dst.end(), sub, mask_lex_less);
        rows[cidx][static_cast<std::size_t>(it - dst.begin())] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    brank[static_cast<std::size_t>(j)] = la::rank_int(rows);
  }

  std::vector<Int> h(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    h[static_cast<std::size_t>(j)] =
        static_cast<Int>(level[static_cast<std::size_t>(j)].size()) -
        brank[static_cast<std::size_t>(j)] - brank[static_cast<std::size_t>(j) + 1];
  return h;
}

std::vector<Int> BettiTable::totals() const {
  std::vector<Int> t(static_cast<std::size_t>(std::max(0, nvars - 1)), 0);
  for (const auto& [i, row] : rows) {
    if (i < 1 || i > nvars - 1) continue;
    for (const auto& [b, mult] : row) t[static_cast<std::size_t>(i - 1)] += mult;
  }
  return t;
}

std::vector<Int> BettiTable::degrees(int i) const {
  std::vector<Int> out;
  auto it = rows.find(i);
  if (it == rows.end()) return out;
  for (const auto& [b, mult] : it->second)
    for (Int c = 0; c < mult; ++c) out.push_back(b);
  return out;
}

namespace {

BettiTable assemble_table(const NumericalSemigroup& S, const std::vector<Int>& degrees,
                          const std::vector<std::vector<Int>>& hs) {
  BettiTable T;
  T.nvars = S.ngens();
  for (std::size_t s = 0; s < degrees.size(); ++s)
    for (int i = 1; i < S.ngens(); ++i)
      if (hs[s][static_cast<std::size_t>(i)] > 0)
        T.rows[i][degrees[s]] += hs[s][static_cast<std::size_t>(i)];
  return T;
}

}  // namespace

BettiTable betti_table(const NumericalSemigroup& S, const Exec& ex) {
  std::vector<Int> degrees;
  for (Int b = 1; b <= betti_degree_bound(S); ++b)
    if (S.contains(b)) degrees.push_back(b);
  std::vector<std::vector<Int>> hs(degrees.size());
  parallel_for(degrees.size(), ex, [&](std::size_t s) {
    hs[s] = reduced_homology_ranks(divisor_complex(S, degrees[s]));
  });
  return assemble_table(S, degrees, hs);
}

StrongIndispensability strongly_indispensable(const NumericalSemigroup& S,
                                              const Exec& ex) {
  BettiTable T = betti_table(S, ex);
  StrongIndispensability out;
  for (const auto& [i, row] : T.rows) {
    for (const auto& [b, mult] : row)
      if (mult >= 2) out.repeated_degrees.push_back({i, b});
    if (out.violation) continue;
    for (const auto& [b, mb] : row) {
      for (const auto& [b2, mb2] : row) {
        if (b == b2) continue;
        if (b - b2 > 0 && S.contains(b - b2)) {
          out.value = false;
          out.violation = {{static_cast<Int>(i), b, b2}};
          break;
        }
      }
      if (out.violation) break;
    }
  }
  return out;
}

namespace ref {

BettiTable betti_table_serial(const NumericalSemigroup& S) {
  std::vector<Int> degrees;
  for (Int b = 1; b <= betti_degree_bound(S); ++b)
    if (S.contains(b)) degrees.push_back(b);
  std::vector<std::vector<Int>> hs(degrees.size());
  for (std::size_t s = 0; s < degrees.size(); ++s)
    hs[s] = reduced_homology_ranks(divisor_complex(S, degrees[s]));
  return assemble_table(S, degrees, hs);
}

}  // namespace ref

}  // namespace liftlab
