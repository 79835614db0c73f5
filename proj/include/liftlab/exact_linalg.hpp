#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "liftlab/errors.hpp"

namespace liftlab::la {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Rank over Q of an integer matrix, via one-step fraction-free (Bareiss)
/// elimination with first-nonzero pivoting.  Destroys its argument.
int rank(std::vector<std::vector<BigInt>> m);

/// Same, for plain 64-bit rows (promoted to arbitrary precision internally).
int rank_int(const std::vector<std::vector<Int>>& rows);

/// Incremental row-echelon accumulator over Q.  insert() reports whether the
/// row grew the span; contains() is exact span membership.  Pivoting is
/// first-nonzero-column, so the accumulated basis is deterministic in the
/// insertion order.
class RowSpan {
 public:
  explicit RowSpan(std::size_t ncols) : ncols_(ncols) {}

  bool insert(std::vector<BigRat> row);
  bool insert_int(const std::vector<Int>& row);
  bool contains(std::vector<BigRat> row) const;
  bool contains_int(const std::vector<Int>& row) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  std::size_t ncols() const { return ncols_; }

 private:
  void reduce(std::vector<BigRat>& row) const;

  std::size_t ncols_;
  // (pivot column, row normalized to pivot 1), kept sorted by pivot column.
  std::vector<std::pair<std::size_t, std::vector<BigRat>>> rows_;
};

/// Is target in the row span of rows (over Q)?
bool in_row_span(const std::vector<std::vector<Int>>& rows,
                 const std::vector<Int>& target);

}  // namespace liftlab::la
