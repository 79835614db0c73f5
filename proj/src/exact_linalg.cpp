#include "liftlab/exact_linalg.hpp"

#include <algorithm>

namespace liftlab::la {

int rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 0;
  const std::size_t nrows = a.size();
  const std::size_t ncols = a[0].size();
  std::size_t rk = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < ncols && rk < nrows; ++col) {
    std::size_t piv = nrows;
    for (std::size_t r = rk; r < nrows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == nrows) continue;
    std::swap(a[rk], a[piv]);
    for (std::size_t r = rk + 1; r < nrows; ++r) {
      // Sylvester identity keeps this division exact.
      for (std::size_t c = col + 1; c < ncols; ++c)
        a[r][c] = (a[rk][col] * a[r][c] - a[r][col] * a[rk][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return static_cast<int>(rk);
}

int rank_int(const std::vector<std::vector<Int>>& rows) {
  std::vector<std::vector<BigInt>> m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    m[r].assign(rows[r].begin(), rows[r].end());
  return rank(std::move(m));
}

void RowSpan::reduce(std::vector<BigRat>& row) const {
  for (const auto& [p, basis] : rows_) {
    if (row[p] == 0) continue;
    BigRat f = row[p];
    for (std::size_t c = p; c < ncols_; ++c) row[c] -= f * basis[c];
  }
}

bool RowSpan::insert(std::vector<BigRat> row) {
  reduce(row);
  std::size_t p = ncols_;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (row[c] != 0) {
      p = c;
      break;
    }
  if (p == ncols_) return false;
  BigRat lead = row[p];
  for (std::size_t c = p; c < ncols_; ++c) row[c] /= lead;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const auto& e, std::size_t col) { return e.first < col; });
  rows_.insert(pos, {p, std::move(row)});
  return true;
}

bool RowSpan::insert_int(const std::vector<Int>& row) {
  std::vector<BigRat> r(row.begin(), row.end());
  return insert(std::move(r));
}

bool RowSpan::contains(std::vector<BigRat> row) const {
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const BigRat& x) { return x == 0; });
}

bool RowSpan::contains_int(const std::vector<Int>& row) const {
  std::vector<BigRat> r(row.begin(), row.end());
  return contains(std::move(r));
}

bool in_row_span(const std::vector<std::vector<Int>>& rows,
                 const std::vector<Int>& target) {
  RowSpan span(target.size());
  for (const auto& r : rows) span.insert_int(r);
  return span.contains_int(target);
}

}  // namespace liftlab::la
