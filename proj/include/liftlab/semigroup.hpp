#pragma once

#include <compare>
#include <string>
#include <vector>

#include "liftlab/errors.hpp"

namespace liftlab {

/// Exponent vector (v_1, ..., v_n), identified with the monomial
/// x_1^{v_1} ... x_n^{v_n}.  Comparison is lexicographic with coordinate 1
/// most significant; that order is the deterministic tie-break used
/// everywhere a representative has to be picked.
struct Factorization {
  std::vector<Int> v;

  Factorization() = default;
  explicit Factorization(std::vector<Int> coords) : v(std::move(coords)) {}

  Int total_degree() const;
  int size() const { return static_cast<int>(v.size()); }
  Int operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

  auto operator<=>(const Factorization&) const = default;
};

/// True when no variable occurs on both sides (coprime monomials).
bool disjoint_support(const Factorization& a, const Factorization& b);

/// Render as a monomial, e.g. "x1^2x3"; the empty exponent vector and the
/// all-zero vector both render as "1".
std::string monomial_text(const Factorization& f);

/// Numerical semigroup S = <m_1, ..., m_n> given by its minimal generators.
/// The constructor validates: all generators positive (NonPositive), gcd one
/// (GcdNotOne), and no generator representable by the others (NotMinimal).
/// Generators are kept in the given order; most of the tangent-cone layer
/// additionally requires m_1 = min(m_i), checked where needed.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Int> gens);

  const std::vector<Int>& generators() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  Int multiplicity() const;  // min generator
  bool first_gen_is_multiplicity() const;

  /// Apery set w.r.t. m_1: for each residue r mod m_1 the least element of S
  /// congruent to r.  apery()[r] is that element.
  const std::vector<Int>& apery() const { return apery_; }

  /// Frobenius number max(Z \ S); -1 when S = N (i.e. 1 in S).
  Int frobenius() const { return frobenius_; }

  /// O(1) membership test for any b >= 0 via the Apery set.
  bool contains(Int b) const;

  /// S-degree of an exponent vector: sum v_i * m_i (overflow-checked).
  /// The vector length must equal ngens().
  Int s_degree(const Factorization& f) const;

  std::string to_string() const;  // "<4,11,29>"

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Int> gens_;
  std::vector<Int> apery_;
  Int frobenius_ = 0;
};

/// All v >= 0 with sum v_i * w_i == b for arbitrary positive weights w
/// (gcd may exceed 1), in ascending lexicographic order.  The workhorse
/// behind factorizations(); useful on its own for weighted monomial bases.
std::vector<Factorization> weighted_factorizations(const std::vector<Int>& w, Int b);

/// All factorizations of b, i.e. the fiber V(b) = { v : sum v_i m_i = b },
/// in ascending lexicographic order.  Empty when b is not in S.
std::vector<Factorization> factorizations(const NumericalSemigroup& S, Int b);

/// |V(b)| by dynamic programming (no enumeration); overflow-checked.
Int factorization_count(const NumericalSemigroup& S, Int b);

/// Order of b in S: the maximum total degree over V(b).  Errors with
/// NotMember when b is not in S.
Int order(const NumericalSemigroup& S, Int b);

/// The k-lifting S_k = <m_1, k m_2, ..., k m_n>.  Requires k >= 1
/// (NonPositive) and gcd(k, m_1) = 1 (KNotCoprime).  The resulting
/// generating set is again minimal, so the constructor validation passes.
NumericalSemigroup lift(const NumericalSemigroup& S, Int k);

/// b -> k b under the correspondence S <-> S_k; requires b in S (NotMember).
Int lift_element(const NumericalSemigroup& S, Int k, Int b);

/// (v_1, v_2, ..., v_n) -> (k v_1, v_2, ..., v_n): the factorization of
/// lift_element(b) in S_k matching v in S.
Factorization lift_factorization(const NumericalSemigroup& S, Int k,
                                 const Factorization& v);

/// Remove duplicates and generators representable by the others; keeps the
/// surviving values in ascending order.  Works for any list of positive
/// integers (gcd may exceed 1); NonPositive on bad input.
std::vector<Int> minimalized_generators(std::vector<Int> gens);

}  // namespace liftlab
