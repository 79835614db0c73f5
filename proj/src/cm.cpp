#include "liftlab/cm.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace liftlab {

namespace {

constexpr Int kDpCap = 50'000'000;

void require_multiplicity_first(const NumericalSemigroup& S) {
  if (!S.first_gen_is_multiplicity())
    fail(Err::M1NotMultiplicity,
         "first generator " + std::to_string(S.generators()[0]) +
             " is not the multiplicity");
}

/// suf[j][r] = maximum total exponent of a representation of r using tail
/// generators j..n-1 only (0-based j >= 1); -1 when unrepresentable.
struct TailTables {
  Int dmax = 0;
  std::vector<std::vector<Int>> suf;
};

TailTables build_tail_tables(const NumericalSemigroup& S, Int dmax) {
  if (dmax > kDpCap) fail(Err::Overflow, "critical degree range too large");
  const auto& g = S.generators();
  int n = S.ngens();
  TailTables T;
  T.dmax = dmax;
  T.suf.assign(static_cast<std::size_t>(n) + 1,
               std::vector<Int>(static_cast<std::size_t>(dmax) + 1, -1));
  T.suf[static_cast<std::size_t>(n)][0] = 0;
  for (int j = n - 1; j >= 1; --j) {
    auto& row = T.suf[static_cast<std::size_t>(j)];
    row = T.suf[static_cast<std::size_t>(j) + 1];
    Int gj = g[static_cast<std::size_t>(j)];
    for (Int r = gj; r <= dmax; ++r) {
      Int below = row[static_cast<std::size_t>(r - gj)];
      if (below >= 0) row[static_cast<std::size_t>(r)] = std::max(row[static_cast<std::size_t>(r)], below + 1);
    }
  }
  return T;
}

/// Lex-smallest tail representation of r (generators 1..n-1) with total
/// exponent >= tau.  Caller guarantees feasibility.
std::vector<Int> lex_smallest_tail(const NumericalSemigroup& S, const TailTables& T,
                                   Int r, Int tau) {
  const auto& g = S.generators();
  int n = S.ngens();
  std::vector<Int> tail;
  for (int j = 1; j < n; ++j) {
    Int gj = g[static_cast<std::size_t>(j)];
    for (Int v = 0; v * gj <= r; ++v) {
      Int rest = T.suf[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(r - v * gj)];
      if (rest >= 0 && v + rest >= tau) {
        tail.push_back(v);
        r -= v * gj;
        tau -= v;
        break;
      }
    }
  }
  return tail;  // r == 0 here by construction
}

struct CriticalVerdict {
  Int threshold = 1;                // least k at which M passes
  std::optional<CmWitness> witness; // set when threshold > 1
};

CriticalVerdict analyze_critical(const NumericalSemigroup& S, const TailTables& T,
                                 const Factorization& M) {
  const Int m1 = S.generators()[0];
  const Int d = S.s_degree(M);
  const Int degM = M.total_degree();

  // For a companion with v_1 = c the best total degree is
  // f(c) = c + max tail exponent of d - c*m_1; its lift at parameter k gains
  // (k-1)c, so the least workable k at this c is 1 + ceil((degM - f(c)) / c).
  // Any representable c >= degM gives req = 1, so the scan is short.
  Int best = std::numeric_limits<Int>::max();
  Int best_c = 0;
  for (Int c = 1; c * m1 <= d; ++c) {
    Int t = T.suf[1][static_cast<std::size_t>(d - c * m1)];
    if (t < 0) continue;
    Int f = c + t;
    Int req = f >= degM ? 1 : 1 + (degM - f + c - 1) / c;
    if (req < best) {
      best = req;
      best_c = c;
    }
    if (best == 1) break;
  }
  if (best == std::numeric_limits<Int>::max())
    fail(Err::NoLiftableFactorization,
         "no factorization of " + std::to_string(d) + " uses x1");

  CriticalVerdict out;
  out.threshold = best;
  if (best > 1) {
    // Witness: lex-smallest companion achieving the minimal threshold.
    // Smaller v_1 always wins lex comparison, so take the smallest workable
    // c (kept during the scan), then the lex-smallest tail of total exponent
    // >= degM - best*c (exactly the tails whose lift catches up at k = best).
    auto tail = lex_smallest_tail(S, T, d - best_c * m1, degM - best * best_c);
    CmWitness w;
    w.M = M;
    w.best_N.v.assign(static_cast<std::size_t>(S.ngens()), 0);
    w.best_N[0] = best_c;
    for (int j = 1; j < S.ngens(); ++j) w.best_N[j] = tail[static_cast<std::size_t>(j) - 1];
    w.deficit = degM - w.best_N.total_degree();
    w.k_threshold = best;
    out.witness = std::move(w);
  }
  return out;
}

Int max_critical_degree(const NumericalSemigroup& S) {
  const auto& g = S.generators();
  Int d = 0;
  for (std::size_t i = 1; i < g.size(); ++i)
    d = checked_add(d, checked_mul(g[0] - 1, g[i]));
  return d;
}

CmReport assemble(const std::vector<CriticalVerdict>& verdicts) {
  CmReport rep;
  rep.k0 = 1;
  for (const auto& v : verdicts) {
    rep.k0 = std::max(rep.k0, v.threshold);
    if (v.witness) rep.witnesses.push_back(*v.witness);
  }
  rep.cm = rep.witnesses.empty();
  return rep;
}

}  // namespace

std::vector<Factorization> critical_monomials(const NumericalSemigroup& S) {
  require_multiplicity_first(S);
  const Int m1 = S.generators()[0];
  int n = S.ngens();
  std::vector<Factorization> out;
  Factorization cur;
  cur.v.assign(static_cast<std::size_t>(n), 0);
  auto dfs = [&](auto&& self, int j) -> void {
    if (j == n) {
      Int d = S.s_degree(cur);
      if (d > 0 && d >= m1 && S.contains(d - m1)) out.push_back(cur);
      return;
    }
    for (Int u = 0; u < m1; ++u) {
      cur[j] = u;
      self(self, j + 1);
    }
    cur[j] = 0;
  };
  dfs(dfs, 1);
  return out;
}

namespace {

std::vector<CriticalVerdict> run_analysis(const NumericalSemigroup& S, const Exec& ex) {
  auto criticals = critical_monomials(S);
  std::vector<CriticalVerdict> verdicts(criticals.size());
  if (criticals.empty()) return verdicts;
  TailTables T = build_tail_tables(S, max_critical_degree(S));
  parallel_for(criticals.size(), ex, [&](std::size_t i) {
    verdicts[i] = analyze_critical(S, T, criticals[i]);
  });
  return verdicts;
}

}  // namespace

bool is_tangent_cone_cm(const NumericalSemigroup& S, const Exec& ex) {
  auto verdicts = run_analysis(S, ex);
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const CriticalVerdict& v) { return v.threshold == 1; });
}

CmReport cm_report(const NumericalSemigroup& S, const Exec& ex) {
  return assemble(run_analysis(S, ex));
}

Int cm_threshold(const NumericalSemigroup& S, const Exec& ex) {
  return cm_report(S, ex).k0;
}

std::vector<CmCandidate> cm_candidates(const NumericalSemigroup& S,
                                       const Factorization& M) {
  require_multiplicity_first(S);
  if (M.size() != S.ngens() || M[0] != 0)
    fail(Err::NotMember, "candidate monomial must be x_1-free");
  Int d = S.s_degree(M);
  Int degM = M.total_degree();
  std::vector<CmCandidate> out;
  for (const auto& N : factorizations(S, d)) {
    if (N[0] == 0) continue;
    CmCandidate c;
    c.N = N;
    Int degN = N.total_degree();
    c.k_required = degN >= degM ? 1 : 1 + (degM - degN + N[0] - 1) / N[0];
    out.push_back(std::move(c));
  }
  if (out.empty())
    fail(Err::NoLiftableFactorization,
         "no factorization of " + std::to_string(d) + " uses x1");
  return out;
}

namespace ref {

CmReport cm_report_serial(const NumericalSemigroup& S) {
  auto criticals = critical_monomials(S);
  std::vector<CriticalVerdict> verdicts(criticals.size());
  if (!criticals.empty()) {
    TailTables T = build_tail_tables(S, max_critical_degree(S));
    for (std::size_t i = 0; i < criticals.size(); ++i)
      verdicts[i] = analyze_critical(S, T, criticals[i]);
  }
  return assemble(verdicts);
}

}  // namespace ref

}  // namespace liftlab
