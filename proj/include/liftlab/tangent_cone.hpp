#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liftlab/parallel.hpp"
#include "liftlab/semigroup.hpp"
#include "liftlab/toric.hpp"

namespace liftlab {

/// Orders ord(b) (the maximum total degree of a factorization of b) for all
/// members b <= bmax, from one sequential DP sweep.  The associated graded
/// ring of K[[S]] has K-basis {[b] : b in S} with [b] in bidegree
/// (b, ord(b)); x_i [b] = [b + m_i] when ord(b + m_i) = ord(b) + 1, else 0.
class OrdTable {
 public:
  OrdTable(const NumericalSemigroup& S, Int bmax);

  Int bmax() const { return bmax_; }
  bool member(Int b) const {
    return b >= 0 && b <= bmax_ && ord_[static_cast<std::size_t>(b)] >= 0;
  }
  Int ord(Int b) const;  // NotMember when b is not a member in range

 private:
  Int bmax_;
  std::vector<Int> ord_;
};

/// Hilbert function of the associated graded ring: HF(d) = #{ b : ord(b) = d }
/// for d = 0..dmax.  Complete by construction (any b with ord(b) <= dmax
/// satisfies b <= dmax * max(m_i), and the scan covers that range).
/// Eventually constant equal to m_1 when m_1 = min(m_i).
std::vector<Int> hilbert_function(const NumericalSemigroup& S, Int dmax);

enum class PieceKind { Empty, Full, ZeroSum };

/// The bidegree-(b, d) piece of the initial-form ideal I* (the ideal of
/// initial forms of the toric ideal, with gr = R/I*), described inside the
/// span of the total-degree-d monomials of the fiber V(b):
///   Empty   - no such monomials (dim 0);
///   Full    - d is below the top total degree of V(b) (the whole span);
///   ZeroSum - d is the top total degree (coefficient-sum-zero subspace).
struct InitialFormPiece {
  Int s_degree = 0;
  Int total_degree = 0;
  PieceKind kind = PieceKind::Empty;
  Int dim = 0;      // dimension of the piece
  Int ambient = 0;  // number of degree-d monomials in V(b)
};

InitialFormPiece initial_form_piece(const NumericalSemigroup& S, Int b, Int d);

/// Integer-coefficient polynomial in normalized form: terms lex-ascending by
/// exponent vector, no zero coefficients, leading (lex-first) coefficient
/// positive, content 1.
struct Poly {
  std::vector<std::pair<Factorization, Int>> terms;

  static Poly monomial(Factorization m);
  /// a - c, normalized (so the rendered leading sign is +).
  static Poly difference(const Factorization& a, const Factorization& c);

  bool zero() const { return terms.empty(); }
  std::string text() const;

  auto operator<=>(const Poly&) const = default;
};

/// Minimal generators of I* at one bidegree: how many, plus deterministic
/// representatives (candidates are the monomial basis for Full pieces and
/// lex-anchored differences for ZeroSum pieces, taken in lex order modulo
/// the maximal-ideal multiples).
struct TcGenerators {
  Int s_degree = 0;
  Int total_degree = 0;
  Int count = 0;
  std::vector<Poly> reps;
};

enum class KoszulMode { SemigroupRing, TangentCone };

struct KoszulBounds {
  Int s_bound = 0;  // 0: module default (see koszul_betti)
  Int t_bound = 0;  // 0: derived; total-degree cap, tangent-cone mode only
};

struct BigradedEntry {
  Int s_degree = 0;
  Int total_degree = -1;  // -1 in ring mode (single grading)
  Int mult = 0;
  auto operator<=>(const BigradedEntry&) const = default;
};

struct KoszulBettiResult {
  KoszulMode mode = KoszulMode::SemigroupRing;
  std::vector<Int> betti;                          // beta_0..beta_n
  std::vector<std::vector<BigradedEntry>> graded;  // per homological index
  /// Euler-characteristic audit residuals: per total degree 0..t_bound in
  /// tangent-cone mode (computed minus predicted from the Hilbert function);
  /// per S-degree 0..s_bound in ring mode.  All zero on success.
  std::vector<Int> euler_residuals;
  KoszulBounds bounds_used;
};

/// Betti numbers of K[S] (ring mode, graded by S-degree) or of the
/// associated graded ring gr (tangent-cone mode, bigraded), from the Koszul
/// complex on x_1..x_n sliced degree by degree.  Defaults: ring mode scans
/// S-degrees up to F(S) + sum(m_i), which is provably complete; tangent-cone
/// mode scans up to 2*(F(S) + sum(m_i)) and audits completeness through the
/// Euler characteristic, erroring with BoundTooSmall when the audit fails
/// (or when a homology class appears beyond an explicit t_bound).
KoszulBettiResult koszul_betti(const NumericalSemigroup& S, KoszulMode mode,
                               KoszulBounds bounds = {}, const Exec& ex = {},
                               bool enforce_audit = true);

/// All minimal bigraded generators of I* with S-degree <= s_bound (default
/// 2*(F(S) + sum m_i)); when audit is set, cross-checked against the
/// tangent-cone Koszul beta_1 bidegrees.  Requires s_bound >= F(S) +
/// sum(m_i) (BoundTooSmall).
std::vector<TcGenerators> tc_minimal_generators(const NumericalSemigroup& S,
                                                Int s_bound = 0, const Exec& ex = {},
                                                bool audit = true);

/// x_1 -> 0 projection.  For a binomial: itself (as a two-term Poly) when
/// x_1-free, otherwise its x_1-free side; errors with NotCoprimeMonomials
/// when both sides use x_1 (the image would be zero).  Results are
/// deduplicated and sorted.
std::vector<Poly> project_pi(const std::vector<Binomial>& gens);

/// Same projection on polynomials: drops every term using x_1, renormalizes;
/// zero images are dropped from the list.
std::vector<Poly> project_pi(const std::vector<Poly>& polys);

/// Do A and B generate the same ideal in K[x_2..x_n]?  All inputs must be
/// x_1-free and homogeneous for the S-grading; decided degree by degree with
/// exact linear algebra.
bool generate_same_pi_ideal(const NumericalSemigroup& S, const std::vector<Poly>& A,
                            const std::vector<Poly>& B);

/// Does gr have the same Betti vector as K[S] (beta_0..beta_n)?
bool homogeneous_type(const NumericalSemigroup& S, const Exec& ex = {});

namespace ref {
KoszulBettiResult koszul_betti_serial(const NumericalSemigroup& S, KoszulMode mode,
                                      KoszulBounds bounds = {},
                                      bool enforce_audit = true);
std::vector<TcGenerators> tc_minimal_generators_serial(const NumericalSemigroup& S,
                                                       Int s_bound = 0);
}  // namespace ref

}  // namespace liftlab
