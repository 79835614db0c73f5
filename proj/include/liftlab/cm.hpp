#pragma once

#include <vector>

#include "liftlab/parallel.hpp"
#include "liftlab/semigroup.hpp"

namespace liftlab {

/// A critical monomial that fails the tangent-cone CM test, with the best
/// companion factorization.  k_threshold is the least k for which the
/// lifted companion catches up in total degree.
struct CmWitness {
  Factorization M;       // x_1-free, exponents below m_1
  Factorization best_N;  // v_1 > 0, same S-degree as M
  Int deficit = 0;       // total_degree(M) - total_degree(best_N), > 0
  Int k_threshold = 1;   // least k for which this M stops failing
};

struct CmReport {
  bool cm = false;
  Int k0 = 1;  // least k such that the tangent cone of S_k is CM; exact
  std::vector<CmWitness> witnesses;  // criticals failing at k = 1, lex order
};

/// x_1-free monomials x_2^{u_2}...x_n^{u_n} with 0 <= u_i < m_1, not all
/// zero, whose S-degree lies in m_1 + S; lex ascending.  These are the only
/// monomials that can obstruct Cohen-Macaulayness of the tangent cone.
/// Errors: M1NotMultiplicity when the first generator is not the smallest.
std::vector<Factorization> critical_monomials(const NumericalSemigroup& S);

/// Degree-comparison CM criterion for the tangent cone of K[[S]]: CM iff
/// every critical M admits a factorization N of deg_S(M) with v_1 > 0 and
/// total degree >= total degree of M.
bool is_tangent_cone_cm(const NumericalSemigroup& S, const Exec& ex = {});

/// Full analysis.  Under the lifting correspondence the criterion for S_k
/// evaluates through S itself (a companion N gains (k-1) v_1 in total
/// degree), so the report carries the exact threshold k0: the tangent cone
/// of S_k is CM precisely for k >= k0 (k coprime to m_1).
CmReport cm_report(const NumericalSemigroup& S, const Exec& ex = {});

Int cm_threshold(const NumericalSemigroup& S, const Exec& ex = {});

/// Every companion N (v_1 > 0) of deg_S(M), with the least k at which its
/// lift reaches the total degree of M; lex order.  Enumeration-based, for
/// verbose reports.  Errors: NoLiftableFactorization when no companion
/// exists; M1NotMultiplicity as above.
struct CmCandidate {
  Factorization N;
  Int k_required = 1;
};
std::vector<CmCandidate> cm_candidates(const NumericalSemigroup& S,
                                       const Factorization& M);

namespace ref {
CmReport cm_report_serial(const NumericalSemigroup& S);
}

}  // namespace liftlab
