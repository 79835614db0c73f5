#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "liftlab/exact_linalg.hpp"

using namespace liftlab;
using la::BigInt;
using la::BigRat;

namespace {

std::vector<std::vector<BigInt>> big(const std::vector<std::vector<long long>>& m) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace

TEST_CASE("rank of hand-checked matrices") {
  CHECK(la::rank(big({{1, 0}, {0, 1}})) == 2);
  CHECK(la::rank(big({{0, 0}, {0, 0}})) == 0);
  CHECK(la::rank(big({{1, 2}, {2, 4}})) == 1);
  CHECK(la::rank(big({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(la::rank(big({{2, 7, 6}, {9, 5, 1}, {4, 3, 8}})) == 3);
  CHECK(la::rank(big({{1, 2, 3, 4}, {2, 4, 6, 8}})) == 1);
  CHECK(la::rank(big({{1, 0}, {0, 0}, {3, 0}, {0, 5}})) == 2);
  CHECK(la::rank({}) == 0);
  // Entries far beyond 64 bits stay exact.
  BigInt huge = BigInt(1) << 100;
  CHECK(la::rank({{huge, 0}, {0, huge}, {huge, huge}}) == 2);
}

TEST_CASE("rank_int agrees with the arbitrary-precision path") {
  std::mt19937_64 rng(1618033);
  for (int trial = 0; trial < 60; ++trial) {
    int nr = 1 + static_cast<int>(rng() % 7);
    int nc = 1 + static_cast<int>(rng() % 7);
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(nr),
                                    std::vector<Int>(static_cast<std::size_t>(nc)));
    std::vector<std::vector<BigInt>> mb(static_cast<std::size_t>(nr),
                                        std::vector<BigInt>(static_cast<std::size_t>(nc)));
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) {
        Int v = static_cast<Int>(rng() % 9) - 4;
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        mb[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      }
    CHECK(la::rank_int(m) == la::rank(mb));
  }
}

TEST_CASE("row span membership and dimension") {
  la::RowSpan span(3);
  CHECK(span.dim() == 0);
  CHECK(span.insert_int({1, 1, 0}));
  CHECK(span.insert_int({0, 1, 1}));
  CHECK_FALSE(span.insert_int({1, 0, -1}));  // difference of the first two
  CHECK(span.dim() == 2);
  CHECK(span.contains_int({1, 0, -1}));
  CHECK(span.contains_int({2, 3, 1}));
  CHECK_FALSE(span.contains_int({1, 0, 0}));
  CHECK(span.insert_int({1, 0, 0}));
  CHECK(span.dim() == 3);
  CHECK(span.contains_int({7, -5, 11}));

  // Rational coordinates.
  la::RowSpan q(2);
  CHECK(q.insert({BigRat(1, 2), BigRat(1, 3)}));
  CHECK(q.contains({BigRat(3), BigRat(2)}));
  CHECK_FALSE(q.contains({BigRat(1), BigRat(1)}));
}

TEST_CASE("in_row_span helper") {
  CHECK(la::in_row_span({{1, 1, 0}, {0, 1, 1}}, {1, 0, -1}));
  CHECK_FALSE(la::in_row_span({{1, 1, 0}, {0, 1, 1}}, {1, 0, 0}));
  CHECK(la::in_row_span({{2, 4}}, {1, 2}));
  CHECK(la::in_row_span({}, {0, 0}));
}

TEST_CASE("incremental span dimension equals Bareiss rank on random matrices") {
  std::mt19937_64 rng(2718281);
  for (int trial = 0; trial < 120; ++trial) {
    int nr = 1 + static_cast<int>(rng() % 7);
    int nc = 1 + static_cast<int>(rng() % 7);
    std::vector<std::vector<Int>> m;
    la::RowSpan span(nc);
    int grew = 0;
    for (int r = 0; r < nr; ++r) {
      std::vector<Int> row(static_cast<std::size_t>(nc));
      for (auto& v : row) v = static_cast<Int>(rng() % 7) - 3;
      if (span.insert_int(row)) ++grew;
      m.push_back(std::move(row));
    }
    CHECK(la::rank_int(m) == grew);
    CHECK(span.dim() == grew);
    // Row order does not change the rank.
    std::shuffle(m.begin(), m.end(), rng);
    CHECK(la::rank_int(m) == grew);
  }
}
