#include "liftlab/errors.hpp"

namespace liftlab {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonPositive: return "NonPositive";
    case Err::GcdNotOne: return "GcdNotOne";
    case Err::NotMinimal: return "NotMinimal";
    case Err::KNotCoprime: return "KNotCoprime";
    case Err::NotMember: return "NotMember";
    case Err::Overflow: return "Overflow";
    case Err::M1NotMultiplicity: return "M1NotMultiplicity";
    case Err::NoLiftableFactorization: return "NoLiftableFactorization";
    case Err::NotCoprimeMonomials: return "NotCoprimeMonomials";
    case Err::BoundTooSmall: return "BoundTooSmall";
  }
  return "Unknown";
}

namespace {
std::string compose(Err code, const std::string& detail) {
  std::string msg = err_name(code);
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}
}  // namespace

Error::Error(Err code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

void fail(Err code, const std::string& detail) { throw Error(code, detail); }

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "addition overflow");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Err::Overflow, "subtraction overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "multiplication overflow");
  return r;
}

}  // namespace liftlab
