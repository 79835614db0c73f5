#pragma once

// Shared helpers for the unit-test suites.

#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "liftlab/errors.hpp"
#include "liftlab/semigroup.hpp"

/// Checks that evaluating `expr` throws liftlab::Error with the given code.
#define CHECK_ERR(expr, expected)              \
  do {                                         \
    bool caught_ = false;                      \
    try {                                      \
      (void)(expr);                            \
    } catch (const liftlab::Error& err_) {     \
      caught_ = true;                          \
      CHECK(err_.code() == (expected));        \
    }                                          \
    CHECK_MESSAGE(caught_, "no error from " #expr); \
  } while (0)

namespace testutil {

inline liftlab::Factorization fac(std::vector<liftlab::Int> v) {
  return liftlab::Factorization(std::move(v));
}

/// Valid lifting parameters in [2, kmax] for the given first generator.
inline std::vector<liftlab::Int> valid_k_upto(liftlab::Int m1, liftlab::Int kmax) {
  std::vector<liftlab::Int> ks;
  for (liftlab::Int k = 2; k <= kmax; ++k)
    if (std::gcd(k, m1) == 1) ks.push_back(k);
  return ks;
}

}  // namespace testutil
