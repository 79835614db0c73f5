#pragma once

#include <string>
#include <vector>

#include "liftlab/parallel.hpp"
#include "liftlab/semigroup.hpp"

namespace liftlab {

/// Difference of two monomials lhs - rhs of the same S-degree, stored with
/// the lexicographically smaller exponent vector as lhs (the positive side).
struct Binomial {
  Factorization lhs, rhs;

  /// Orients the pair (smaller side first); rejects equal sides.
  static Binomial make(Factorization a, Factorization b);

  std::string text() const;  // e.g. "x2^3 - x1^5"

  auto operator<=>(const Binomial&) const = default;
};

/// The fiber V(b) together with its support graph: vertices are the
/// factorizations of b in lex order, edges join factorizations whose
/// monomials share a variable.  Components hold sorted vertex indices and
/// are ordered by their smallest index.
struct FiberGraph {
  Int degree = 0;
  std::vector<Factorization> vertices;
  std::vector<std::vector<int>> components;
};

FiberGraph degree_graph(const NumericalSemigroup& S, Int b);

/// F(S) + sum(m_i): every Betti degree of the toric ideal lies at or below
/// this bound (inclusive; <4,6,9> has a second syzygy exactly at the bound).
Int betti_degree_bound(const NumericalSemigroup& S);

/// S-degrees b whose fiber graph is disconnected, one copy per minimal
/// generator in that degree (i.e. components - 1 copies), ascending.
std::vector<Int> betti1_degrees(const NumericalSemigroup& S, const Exec& ex = {});

/// A minimal binomial generating set of the toric ideal: per disconnected
/// degree, each non-first component's lex-smallest monomial is connected to
/// the fiber's global lex-smallest monomial.  Deterministic.
std::vector<Binomial> minimal_generators(const NumericalSemigroup& S, const Exec& ex = {});

/// Binomials that occur in every minimal generating set: fibers with exactly
/// two factorizations forming a coprime (disjoint-support) pair.
std::vector<Binomial> indispensable_binomials(const NumericalSemigroup& S,
                                              const Exec& ex = {});

/// Transport of a binomial along the k-lifting: multiplies the x_1 exponent
/// of the unique side using x_1 by k (x_1-free binomials are unchanged).
/// Errors: NotCoprimeMonomials when both sides use x_1; NotMember when the
/// sides' S-degrees differ; NonPositive / KNotCoprime on bad k.
Binomial lift_binomial(const NumericalSemigroup& S, Int k, const Binomial& B);

/// Is M - N in the sub-ideal generated by the binomials of S-degree < b,
/// where b is the common S-degree of M and N?  Decided by exact linear
/// algebra over the monomial basis V(b).  Agrees with the fiber-graph
/// component partition (two factorizations are congruent modulo lower
/// degrees exactly when they lie in the same component).
bool lower_degree_membership(const NumericalSemigroup& S, const Factorization& M,
                             const Factorization& N);

namespace ref {
/// Plain serial loops, kept as reference implementations for the parallel
/// kernels above; results are identical by construction.
std::vector<Int> betti1_degrees_serial(const NumericalSemigroup& S);
std::vector<Binomial> minimal_generators_serial(const NumericalSemigroup& S);
std::vector<Binomial> indispensable_binomials_serial(const NumericalSemigroup& S);
}  // namespace ref

}  // namespace liftlab
