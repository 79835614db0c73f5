#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liftlab {

// Every quantity in the library is an exact signed 64-bit integer; arithmetic
// that could wrap goes through the checked_* helpers below.
using Int = std::int64_t;

enum class Err {
  NonPositive,
  GcdNotOne,
  NotMinimal,
  KNotCoprime,
  NotMember,
  Overflow,
  M1NotMultiplicity,
  NoLiftableFactorization,
  NotCoprimeMonomials,
  BoundTooSmall,
};

const char* err_name(Err e);

/// Domain error carrying a stable code (err_name) plus a human detail string.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& detail);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& detail = "");

/// Overflow-checked 64-bit arithmetic; throws Error(Err::Overflow) on wrap.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace liftlab
