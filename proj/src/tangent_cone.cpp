#include "liftlab/tangent_cone.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "liftlab/betti.hpp"
#include "liftlab/exact_linalg.hpp"

namespace liftlab {

namespace {

constexpr Int kDpCap = 50'000'000;

Int max_generator(const NumericalSemigroup& S) {
  return *std::max_element(S.generators().begin(), S.generators().end());
}

Int default_tc_s_bound(const NumericalSemigroup& S) {
  return checked_mul(2, betti_degree_bound(S));
}

void require_mask_capacity(const NumericalSemigroup& S) {
  if (S.ngens() > 24) fail(Err::Overflow, "too many generators for face scan");
}

}  // namespace

OrdTable::OrdTable(const NumericalSemigroup& S, Int bmax) : bmax_(std::max<Int>(bmax, 0)) {
  if (bmax_ > kDpCap) fail(Err::Overflow, "order table too large");
  ord_.assign(static_cast<std::size_t>(bmax_) + 1, -1);
  ord_[0] = 0;
  for (Int r = 1; r <= bmax_; ++r)
    for (Int g : S.generators())
      if (r >= g && ord_[static_cast<std::size_t>(r - g)] >= 0)
        ord_[static_cast<std::size_t>(r)] = std::max(
            ord_[static_cast<std::size_t>(r)], ord_[static_cast<std::size_t>(r - g)] + 1);
}

Int OrdTable::ord(Int b) const {
  if (!member(b))
    fail(Err::NotMember, std::to_string(b) + " not a member within the table range");
  return ord_[static_cast<std::size_t>(b)];
}

std::vector<Int> hilbert_function(const NumericalSemigroup& S, Int dmax) {
  if (dmax < 0) return {};
  OrdTable T(S, checked_mul(dmax, max_generator(S)));
  std::vector<Int> hf(static_cast<std::size_t>(dmax) + 1, 0);
  for (Int b = 0; b <= T.bmax(); ++b)
    if (T.member(b) && T.ord(b) <= dmax) ++hf[static_cast<std::size_t>(T.ord(b))];
  return hf;
}

InitialFormPiece initial_form_piece(const NumericalSemigroup& S, Int b, Int d) {
  InitialFormPiece P;
  P.s_degree = b;
  P.total_degree = d;
  if (b < 0 || d < 0 || !S.contains(b)) return P;
  auto fib = factorizations(S, b);
  Int dmax = 0;
  for (const auto& f : fib) {
    Int t = f.total_degree();
    dmax = std::max(dmax, t);
    if (t == d) ++P.ambient;
  }
  if (P.ambient == 0) return P;  // Empty
  if (d < dmax) {
    P.kind = PieceKind::Full;
    P.dim = P.ambient;
  } else {
    P.kind = PieceKind::ZeroSum;
    P.dim = P.ambient - 1;
  }
  return P;
}

namespace {

void normalize_poly(Poly& p) {
  std::sort(p.terms.begin(), p.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Factorization, Int>> merged;
  for (auto& t : p.terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const auto& t) { return t.second == 0; });
  if (!merged.empty()) {
    Int content = 0;
    for (const auto& t : merged) content = std::gcd(content, t.second < 0 ? -t.second : t.second);
    Int sign = merged.front().second < 0 ? -1 : 1;
    for (auto& t : merged) t.second /= content * sign;
  }
  p.terms = std::move(merged);
}

}  // namespace

Poly Poly::monomial(Factorization m) {
  Poly p;
  p.terms.push_back({std::move(m), 1});
  return p;
}

Poly Poly::difference(const Factorization& a, const Factorization& c) {
  Poly p;
  p.terms.push_back({a, 1});
  p.terms.push_back({c, -1});
  normalize_poly(p);
  return p;
}

std::string Poly::text() const {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Int c = terms[i].second;
    std::string mono = monomial_text(terms[i].first);
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Int a = c < 0 ? -c : c;
    if (a != 1 || mono == "1") s += std::to_string(a);
    if (mono != "1") s += mono;
  }
  return s;
}

namespace {

// ---- Koszul slices -------------------------------------------------------

// Faces grouped by cardinality, each level sorted by mask for lookup.
using Levels = std::vector<std::vector<std::uint32_t>>;

/// dim H_i for i = 0..n of the sliced Koszul complex whose level-i basis is
/// levels[i]; the boundary sends a face to its subfaces, with a nonzero
/// (+-1) entry exactly when the subface is present in the slice.
std::vector<Int> slice_homology(int n, const Levels& levels) {
  std::vector<int> brank(static_cast<std::size_t>(n) + 2, 0);
  for (int j = 1; j <= n; ++j) {
    const auto& src = levels[static_cast<std::size_t>(j)];
    const auto& dst = levels[static_cast<std::size_t>(j) - 1];
    if (src.empty() || dst.empty()) continue;
    std::vector<std::vector<Int>> rows(src.size(), std::vector<Int>(dst.size(), 0));
    bool any = false;
    for (std::size_t cidx = 0; cidx < src.size(); ++cidx) {
      std::uint32_t F = src[cidx];
      int pos = 0;
      for (int v = 0; v < n; ++v) {
        if (!(F & (1u << v))) continue;
        std::uint32_t sub = F & ~(1u << v);
        auto it = std::lower_bound(dst.begin(), dst.end(), sub);
        if (it != dst.end() && *it == sub) {
          rows[cidx][static_cast<std::size_t>(it - dst.begin())] = (pos % 2 == 0) ? 1 : -1;
          any = true;
        }
        ++pos;
      }
    }
    if (any) brank[static_cast<std::size_t>(j)] = la::rank_int(rows);
  }
  std::vector<Int> h(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j)
    h[static_cast<std::size_t>(j)] =
        static_cast<Int>(levels[static_cast<std::size_t>(j)].size()) -
        brank[static_cast<std::size_t>(j)] - brank[static_cast<std::size_t>(j) + 1];
  return h;
}

Int face_degree_drop(const NumericalSemigroup& S, std::uint32_t F) {
  Int s = 0;
  for (int i = 0; i < S.ngens(); ++i)
    if (F & (1u << i)) s += S.generators()[static_cast<std::size_t>(i)];
  return s;
}

/// Ring mode: one slice per S-degree b; e_F present iff b - m_F in S.
Levels ring_levels(const NumericalSemigroup& S, Int b) {
  int n = S.ngens();
  Levels levels(static_cast<std::size_t>(n) + 1);
  std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t F = 0; F <= full; ++F) {
    Int c = b - face_degree_drop(S, F);
    if (c >= 0 && S.contains(c))
      levels[static_cast<std::size_t>(std::popcount(F))].push_back(F);
  }
  return levels;  // masks ascend within each level already
}

/// Tangent-cone mode: slices of S-degree b split by total degree
/// d = |F| + ord(b - m_F).
std::map<Int, Levels> tc_levels(const NumericalSemigroup& S, const OrdTable& T, Int b) {
  int n = S.ngens();
  std::map<Int, Levels> out;
  std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t F = 0; F <= full; ++F) {
    Int c = b - face_degree_drop(S, F);
    if (c < 0 || !T.member(c)) continue;
    Int d = std::popcount(F) + T.ord(c);
    auto& levels = out[d];
    if (levels.empty()) levels.assign(static_cast<std::size_t>(n) + 1, {});
    levels[static_cast<std::size_t>(std::popcount(F))].push_back(F);
  }
  return out;
}

/// Per-S-degree Koszul homology: list of (total degree, h vector); ring mode
/// uses the single pseudo total degree -1.
using DegreeHomology = std::vector<std::pair<Int, std::vector<Int>>>;

DegreeHomology koszul_worker(const NumericalSemigroup& S, KoszulMode mode,
                             const OrdTable* T, Int b) {
  DegreeHomology out;
  if (mode == KoszulMode::SemigroupRing) {
    out.push_back({-1, slice_homology(S.ngens(), ring_levels(S, b))});
  } else {
    for (const auto& [d, levels] : tc_levels(S, *T, b))
      out.push_back({d, slice_homology(S.ngens(), levels)});
  }
  return out;
}

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

KoszulBettiResult koszul_assemble(const NumericalSemigroup& S, KoszulMode mode,
                                  const KoszulBounds& bounds,
                                  const std::vector<Int>& degrees,
                                  const std::vector<DegreeHomology>& slots,
                                  bool enforce_audit) {
  int n = S.ngens();
  KoszulBettiResult R;
  R.mode = mode;
  R.bounds_used = bounds;
  R.betti.assign(static_cast<std::size_t>(n) + 1, 0);
  R.graded.assign(static_cast<std::size_t>(n) + 1, {});

  if (mode == KoszulMode::TangentCone) {
    for (std::size_t s = 0; s < degrees.size(); ++s)
      for (const auto& [d, h] : slots[s])
        for (int i = 0; i <= n; ++i)
          if (h[static_cast<std::size_t>(i)] > 0 && d > bounds.t_bound)
            fail(Err::BoundTooSmall,
                 "homology class at total degree " + std::to_string(d) +
                     " beyond t_bound " + std::to_string(bounds.t_bound));
  }

  for (std::size_t s = 0; s < degrees.size(); ++s) {
    for (const auto& [d, h] : slots[s]) {
      for (int i = 0; i <= n; ++i) {
        Int mult = h[static_cast<std::size_t>(i)];
        if (mult <= 0) continue;
        R.betti[static_cast<std::size_t>(i)] += mult;
        R.graded[static_cast<std::size_t>(i)].push_back({degrees[s], d, mult});
      }
    }
  }

  if (mode == KoszulMode::SemigroupRing) {
    // Per-degree Euler check: alternating homology sum vs alternating face
    // count of the divisor complex.
    R.euler_residuals.assign(static_cast<std::size_t>(bounds.s_bound) + 1, 0);
    for (std::size_t s = 0; s < degrees.size(); ++s) {
      Int b = degrees[s];
      Int alt = 0;
      for (const auto& [d, h] : slots[s])
        for (int i = 0; i <= n; ++i)
          alt += (i % 2 == 0 ? 1 : -1) * h[static_cast<std::size_t>(i)];
      Int faces = 0;
      std::uint32_t full = (1u << n) - 1u;
      for (std::uint32_t F = 0; F <= full; ++F) {
        Int c = b - face_degree_drop(S, F);
        if (c >= 0 && S.contains(c)) faces += (std::popcount(F) % 2 == 0) ? 1 : -1;
      }
      R.euler_residuals[static_cast<std::size_t>(b)] = alt - faces;
    }
  } else {
    // Alternating sums per total degree must match the prediction from the
    // Hilbert function; a nonzero residual means a slice escaped s_bound.
    std::vector<Int> alt(static_cast<std::size_t>(bounds.t_bound) + 1, 0);
    for (std::size_t s = 0; s < degrees.size(); ++s)
      for (const auto& [d, h] : slots[s]) {
        if (d > bounds.t_bound) continue;
        for (int i = 0; i <= n; ++i)
          alt[static_cast<std::size_t>(d)] +=
              (i % 2 == 0 ? 1 : -1) * h[static_cast<std::size_t>(i)];
      }
    auto hf = hilbert_function(S, bounds.t_bound);
    R.euler_residuals.assign(static_cast<std::size_t>(bounds.t_bound) + 1, 0);
    for (Int d = 0; d <= bounds.t_bound; ++d) {
      Int expect = 0;
      for (int j = 0; j <= n && j <= d; ++j)
        expect += (j % 2 == 0 ? 1 : -1) * binom(n, j) * hf[static_cast<std::size_t>(d - j)];
      R.euler_residuals[static_cast<std::size_t>(d)] =
          alt[static_cast<std::size_t>(d)] - expect;
    }
  }

  if (enforce_audit) {
    for (std::size_t d = 0; d < R.euler_residuals.size(); ++d)
      if (R.euler_residuals[d] != 0)
        fail(Err::BoundTooSmall,
             "Euler audit residual " + std::to_string(R.euler_residuals[d]) +
                 " at degree " + std::to_string(static_cast<Int>(d)));
  }
  return R;
}

struct KoszulPlan {
  KoszulBounds bounds;
  std::vector<Int> degrees;  // 0 plus members up to s_bound
};

KoszulPlan koszul_plan(const NumericalSemigroup& S, KoszulMode mode, KoszulBounds bounds,
                       const OrdTable** ord_out, std::optional<OrdTable>& ord_storage) {
  require_mask_capacity(S);
  KoszulPlan plan;
  if (mode == KoszulMode::SemigroupRing) {
    Int dflt = betti_degree_bound(S);
    if (bounds.s_bound == 0) bounds.s_bound = dflt;
    if (bounds.s_bound < dflt)
      fail(Err::BoundTooSmall, "ring-mode s_bound below " + std::to_string(dflt));
    bounds.t_bound = 0;
    *ord_out = nullptr;
  } else {
    if (bounds.s_bound == 0) bounds.s_bound = default_tc_s_bound(S);
    ord_storage.emplace(S, bounds.s_bound);
    *ord_out = &*ord_storage;
    if (bounds.t_bound == 0) {
      Int maxord = 0;
      for (Int b = 0; b <= bounds.s_bound; ++b)
        if (ord_storage->member(b)) maxord = std::max(maxord, ord_storage->ord(b));
      bounds.t_bound = maxord + S.ngens();
    }
  }
  plan.bounds = bounds;
  plan.degrees.push_back(0);
  for (Int b = 1; b <= bounds.s_bound; ++b)
    if (S.contains(b)) plan.degrees.push_back(b);
  return plan;
}

// ---- minimal generators of the initial-form ideal ------------------------

struct FiberView {
  std::vector<Factorization> fib;            // lex ascending
  std::map<Int, std::vector<int>> by_deg;    // total degree -> fib indices
  Int dmax = 0;
};

FiberView fiber_view(const NumericalSemigroup& S, Int b) {
  FiberView V;
  V.fib = factorizations(S, b);
  for (int i = 0; i < static_cast<int>(V.fib.size()); ++i) {
    Int t = V.fib[static_cast<std::size_t>(i)].total_degree();
    V.by_deg[t].push_back(i);
    V.dmax = std::max(V.dmax, t);
  }
  return V;
}

std::vector<TcGenerators> tc_gens_at_degree(const NumericalSemigroup& S, Int b) {
  std::vector<TcGenerators> out;
  FiberView V = fiber_view(S, b);
  if (V.fib.empty()) return out;
  int n = S.ngens();

  for (const auto& [d, idxs] : V.by_deg) {
    Int ambient = static_cast<Int>(idxs.size());
    Int piece_dim = d < V.dmax ? ambient : ambient - 1;
    if (piece_dim == 0) continue;

    auto position = [&](const Factorization& f) {
      auto fit = std::lower_bound(V.fib.begin(), V.fib.end(), f);
      int fidx = static_cast<int>(fit - V.fib.begin());
      auto pit = std::lower_bound(idxs.begin(), idxs.end(), fidx);
      return static_cast<std::size_t>(pit - idxs.begin());
    };

    // Span of the maximal-ideal multiples x_i * (I*)_{(b - m_i, d - 1)}.
    la::RowSpan span(static_cast<std::size_t>(ambient));
    std::vector<Int> row(static_cast<std::size_t>(ambient));
    auto insert_shifted_unit = [&](const Factorization& w, int var) {
      Factorization t = w;
      t[var] += 1;
      std::fill(row.begin(), row.end(), 0);
      row[position(t)] = 1;
      span.insert_int(row);
    };
    auto insert_shifted_diff = [&](const Factorization& wj, const Factorization& w0, int var) {
      Factorization a = wj, c = w0;
      a[var] += 1;
      c[var] += 1;
      std::fill(row.begin(), row.end(), 0);
      row[position(a)] += 1;
      row[position(c)] -= 1;
      span.insert_int(row);
    };
    for (int var = 0; var < n; ++var) {
      Int c = b - S.generators()[static_cast<std::size_t>(var)];
      if (c < 0 || !S.contains(c)) continue;
      FiberView L = fiber_view(S, c);
      auto it = L.by_deg.find(d - 1);
      if (it == L.by_deg.end()) continue;
      const auto& lidxs = it->second;
      if (d - 1 < L.dmax) {
        for (int li : lidxs)
          insert_shifted_unit(L.fib[static_cast<std::size_t>(li)], var);
      } else {
        for (std::size_t j = 1; j < lidxs.size(); ++j)
          insert_shifted_diff(L.fib[static_cast<std::size_t>(lidxs[j])],
                              L.fib[static_cast<std::size_t>(lidxs[0])], var);
      }
    }

    Int count = piece_dim - span.dim();
    if (count < 0) throw std::logic_error("initial-form span exceeded piece");
    if (count == 0) continue;

    TcGenerators G;
    G.s_degree = b;
    G.total_degree = d;
    G.count = count;
    if (d < V.dmax) {
      for (int idx : idxs) {
        if (static_cast<Int>(G.reps.size()) == count) break;
        std::fill(row.begin(), row.end(), 0);
        row[position(V.fib[static_cast<std::size_t>(idx)])] = 1;
        if (span.insert_int(row))
          G.reps.push_back(Poly::monomial(V.fib[static_cast<std::size_t>(idx)]));
      }
    } else {
      for (std::size_t j = 1; j < idxs.size(); ++j) {
        if (static_cast<Int>(G.reps.size()) == count) break;
        std::fill(row.begin(), row.end(), 0);
        row[j] += 1;
        row[0] -= 1;  // anchor: the lex-smallest degree-d monomial
        if (span.insert_int(row))
          G.reps.push_back(Poly::difference(V.fib[static_cast<std::size_t>(idxs[j])],
                                            V.fib[static_cast<std::size_t>(idxs[0])]));
      }
    }
    if (static_cast<Int>(G.reps.size()) != count)
      throw std::logic_error("initial-form representative extraction incomplete");
    out.push_back(std::move(G));
  }
  return out;
}

std::vector<Int> member_list(const NumericalSemigroup& S, Int bound) {
  std::vector<Int> out;
  for (Int b = 1; b <= bound; ++b)
    if (S.contains(b)) out.push_back(b);
  return out;
}

void audit_tc_generators(const NumericalSemigroup& S, Int s_bound,
                         const std::vector<TcGenerators>& gens, const Exec& ex) {
  auto K = koszul_betti(S, KoszulMode::TangentCone, {s_bound, 0}, ex, true);
  std::vector<BigradedEntry> expect;
  for (const auto& G : gens) expect.push_back({G.s_degree, G.total_degree, G.count});
  if (expect != K.graded[1])
    throw std::logic_error("initial-form generators disagree with Koszul beta_1");
}

}  // namespace

KoszulBettiResult koszul_betti(const NumericalSemigroup& S, KoszulMode mode,
                               KoszulBounds bounds, const Exec& ex, bool enforce_audit) {
  const OrdTable* T = nullptr;
  std::optional<OrdTable> storage;
  KoszulPlan plan = koszul_plan(S, mode, bounds, &T, storage);
  std::vector<DegreeHomology> slots(plan.degrees.size());
  parallel_for(plan.degrees.size(), ex, [&](std::size_t s) {
    slots[s] = koszul_worker(S, mode, T, plan.degrees[s]);
  });
  return koszul_assemble(S, mode, plan.bounds, plan.degrees, slots, enforce_audit);
}

std::vector<TcGenerators> tc_minimal_generators(const NumericalSemigroup& S, Int s_bound,
                                                const Exec& ex, bool audit) {
  if (s_bound == 0) s_bound = default_tc_s_bound(S);
  if (s_bound < betti_degree_bound(S))
    fail(Err::BoundTooSmall,
         "s_bound below " + std::to_string(betti_degree_bound(S)));
  auto degrees = member_list(S, s_bound);
  std::vector<std::vector<TcGenerators>> slots(degrees.size());
  parallel_for(degrees.size(), ex,
               [&](std::size_t s) { slots[s] = tc_gens_at_degree(S, degrees[s]); });
  std::vector<TcGenerators> out;
  for (auto& s : slots)
    for (auto& g : s) out.push_back(std::move(g));
  if (audit) audit_tc_generators(S, s_bound, out, ex);
  return out;
}

std::vector<Poly> project_pi(const std::vector<Binomial>& gens) {
  std::vector<Poly> out;
  for (const Binomial& B : gens) {
    bool l1 = B.lhs.size() > 0 && B.lhs[0] != 0;
    bool r1 = B.rhs.size() > 0 && B.rhs[0] != 0;
    if (l1 && r1) fail(Err::NotCoprimeMonomials, "x1 occurs on both sides");
    if (!l1 && !r1)
      out.push_back(Poly::difference(B.lhs, B.rhs));
    else
      out.push_back(Poly::monomial(l1 ? B.rhs : B.lhs));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Poly> project_pi(const std::vector<Poly>& polys) {
  std::vector<Poly> out;
  for (const Poly& p : polys) {
    Poly q;
    for (const auto& t : p.terms)
      if (t.first.size() == 0 || t.first[0] == 0) q.terms.push_back(t);
    normalize_poly(q);
    if (!q.zero()) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Int homogeneous_s_degree(const NumericalSemigroup& S, const Poly& p) {
  Int deg = -1;
  for (const auto& t : p.terms) {
    if (t.first.size() > 0 && t.first[0] != 0)
      fail(Err::NotMember, "polynomial is not x_1-free");
    Int d = S.s_degree(t.first);
    if (deg < 0) deg = d;
    if (d != deg) fail(Err::NotMember, "polynomial is not S-homogeneous");
  }
  return deg;
}

bool pi_ideal_contains(const NumericalSemigroup& S, const std::vector<Poly>& gens,
                       const Poly& f) {
  Int b = homogeneous_s_degree(S, f);
  if (b < 0) return true;  // zero polynomial
  std::vector<Int> tail(S.generators().begin() + 1, S.generators().end());
  int n = S.ngens();

  auto embed = [n](const Factorization& t) {
    Factorization e;
    e.v.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) e[i] = t[i - 1];
    return e;
  };

  std::vector<Factorization> basis;
  for (const auto& t : weighted_factorizations(tail, b)) basis.push_back(embed(t));
  auto index_of = [&](const Factorization& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    return static_cast<std::size_t>(it - basis.begin());
  };

  la::RowSpan span(basis.size());
  std::vector<Int> row(basis.size());
  for (const Poly& g : gens) {
    Int dg = homogeneous_s_degree(S, g);
    if (dg < 0 || dg > b) continue;
    for (const auto& P : weighted_factorizations(tail, b - dg)) {
      Factorization shift = embed(P);
      std::fill(row.begin(), row.end(), 0);
      for (const auto& t : g.terms) {
        Factorization m = t.first;
        for (int i = 0; i < n; ++i) m[i] += shift[i];
        row[index_of(m)] += t.second;
      }
      span.insert_int(row);
    }
  }
  std::fill(row.begin(), row.end(), 0);
  for (const auto& t : f.terms) row[index_of(t.first)] += t.second;
  return span.contains_int(row);
}

}  // namespace

bool generate_same_pi_ideal(const NumericalSemigroup& S, const std::vector<Poly>& A,
                            const std::vector<Poly>& B) {
  for (const Poly& a : A)
    if (!pi_ideal_contains(S, B, a)) return false;
  for (const Poly& b : B)
    if (!pi_ideal_contains(S, A, b)) return false;
  return true;
}

bool homogeneous_type(const NumericalSemigroup& S, const Exec& ex) {
  BettiTable T = betti_table(S, ex);
  std::vector<Int> ring;
  ring.push_back(1);
  for (Int t : T.totals()) ring.push_back(t);
  ring.push_back(0);  // beta_n of the depth-1 ring K[S] vanishes
  auto K = koszul_betti(S, KoszulMode::TangentCone, {}, ex, true);
  return ring == K.betti;
}

namespace ref {

KoszulBettiResult koszul_betti_serial(const NumericalSemigroup& S, KoszulMode mode,
                                      KoszulBounds bounds, bool enforce_audit) {
  const OrdTable* T = nullptr;
  std::optional<OrdTable> storage;
  KoszulPlan plan = koszul_plan(S, mode, bounds, &T, storage);
  std::vector<DegreeHomology> slots(plan.degrees.size());
  for (std::size_t s = 0; s < plan.degrees.size(); ++s)
    slots[s] = koszul_worker(S, mode, T, plan.degrees[s]);
  return koszul_assemble(S, mode, plan.bounds, plan.degrees, slots, enforce_audit);
}

std::vector<TcGenerators> tc_minimal_generators_serial(const NumericalSemigroup& S,
                                                       Int s_bound) {
  if (s_bound == 0) s_bound = default_tc_s_bound(S);
  if (s_bound < betti_degree_bound(S))
    fail(Err::BoundTooSmall,
         "s_bound below " + std::to_string(betti_degree_bound(S)));
  std::vector<TcGenerators> out;
  for (Int b = 1; b <= s_bound; ++b) {
    if (!S.contains(b)) continue;
    for (auto& g : tc_gens_at_degree(S, b)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ref

}  // namespace liftlab
