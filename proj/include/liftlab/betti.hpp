#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liftlab/parallel.hpp"
#include "liftlab/semigroup.hpp"

namespace liftlab {

/// Squarefree divisor complex of b: faces are the subsets F of variables
/// with b - sum_{i in F} m_i in S, stored as bitmasks (bit i = variable
/// x_{i+1}), grouped by cardinality and lex-ordered within a group.
struct DivisorComplex {
  Int degree = 0;
  int nvars = 0;
  std::vector<std::uint32_t> faces;
};

DivisorComplex divisor_complex(const NumericalSemigroup& S, Int b);

/// h[j] = dim_Q of the reduced homology in chain cardinality j (that is,
/// reduced homological dimension j-1), for j = 0..nvars-1.  The graded Betti
/// number beta_{i,b} of K[S] equals h[i] for the complex of b.
std::vector<Int> reduced_homology_ranks(const DivisorComplex& C);

/// Graded Betti numbers of K[S] over the polynomial ring: rows[i][b] is
/// beta_{i,b}, kept only when nonzero, for i >= 1.
struct BettiTable {
  int nvars = 0;
  std::map<int, std::map<Int, Int>> rows;

  /// Total beta_i for i = 1..nvars-1 (zero entries included).
  std::vector<Int> totals() const;
  /// The degrees of row i, each repeated by multiplicity, ascending.
  std::vector<Int> degrees(int i) const;

  bool operator==(const BettiTable&) const = default;
};

/// Scans all member degrees up to F(S) + sum(m_i) (inclusive; the bound is
/// attained, e.g. the second syzygy degree 30 of <4,6,9>).
BettiTable betti_table(const NumericalSemigroup& S, const Exec& ex = {});

struct StrongIndispensability {
  bool value = true;
  /// First (i, b, b') in scan order (i asc, b asc, b' asc) with b != b'
  /// Betti degrees in step i and b - b' in S.
  std::optional<std::array<Int, 3>> violation;
  /// (i, b) with beta_{i,b} >= 2: equal-degree pairs cannot be compared by
  /// the degree test, so they are surfaced as warnings, not failures.
  std::vector<std::pair<int, Int>> repeated_degrees;
};

/// Degree test for strong indispensability of the minimal free resolution:
/// no difference of two distinct Betti degrees in the same step may lie in S.
StrongIndispensability strongly_indispensable(const NumericalSemigroup& S,
                                              const Exec& ex = {});

namespace ref {
BettiTable betti_table_serial(const NumericalSemigroup& S);
}

}  // namespace liftlab
