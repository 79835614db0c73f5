#include "liftlab/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace liftlab {

namespace {

// Resource guard for membership DP tables built from raw user input.
constexpr Int kDpCap = 50'000'000;

std::vector<char> reachable_table(const std::vector<Int>& gens, Int limit) {
  if (limit > kDpCap) fail(Err::Overflow, "membership table too large");
  std::vector<char> mem(static_cast<std::size_t>(limit) + 1, 0);
  mem[0] = 1;
  for (Int g : gens)
    for (Int r = g; r <= limit; ++r)
      if (mem[static_cast<std::size_t>(r - g)]) mem[static_cast<std::size_t>(r)] = 1;
  return mem;
}

// Is t a nonnegative integer combination of gens?  (t >= 0; gens positive.)
bool representable(Int t, const std::vector<Int>& gens) {
  if (t == 0) return true;
  if (gens.empty()) return false;
  Int g = 0;
  for (Int x : gens) g = std::gcd(g, x);
  if (t % g != 0) return false;
  std::vector<Int> scaled(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) scaled[i] = gens[i] / g;
  auto mem = reachable_table(scaled, t / g);
  return mem[static_cast<std::size_t>(t / g)] != 0;
}

}  // namespace

Int Factorization::total_degree() const {
  Int t = 0;
  for (Int c : v) t = checked_add(t, c);
  return t;
}

bool disjoint_support(const Factorization& a, const Factorization& b) {
  int n = std::min(a.size(), b.size());
  for (int i = 0; i < n; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

std::string monomial_text(const Factorization& f) {
  std::string s;
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    s += "x" + std::to_string(i + 1);
    if (f[i] > 1) s += "^" + std::to_string(f[i]);
  }
  return s.empty() ? "1" : s;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Int> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) fail(Err::NonPositive, "empty generator list");
  for (Int g : gens_)
    if (g <= 0) fail(Err::NonPositive, "generator " + std::to_string(g));

  Int g = 0;
  for (Int x : gens_) g = std::gcd(g, x);
  if (g != 1) fail(Err::GcdNotOne, "gcd of generators is " + std::to_string(g));

  for (std::size_t j = 0; j < gens_.size(); ++j) {
    std::vector<Int> others;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (i != j) others.push_back(gens_[i]);
    if (representable(gens_[j], others))
      fail(Err::NotMinimal, "generator " + std::to_string(gens_[j]) +
                                " is representable by the others");
  }

  // Apery set w.r.t. m_1 by reachability DP, doubling the scan window until
  // every residue class has been hit (gcd 1 guarantees termination).
  Int m1 = gens_[0];
  Int limit = checked_mul(2, std::max(m1, *std::max_element(gens_.begin(), gens_.end())));
  for (;;) {
    auto mem = reachable_table(gens_, limit);
    apery_.assign(static_cast<std::size_t>(m1), -1);
    Int found = 0;
    for (Int b = 0; b <= limit && found < m1; ++b) {
      if (!mem[static_cast<std::size_t>(b)]) continue;
      auto r = static_cast<std::size_t>(b % m1);
      if (apery_[r] < 0) {
        apery_[r] = b;
        ++found;
      }
    }
    if (found == m1) break;
    limit = checked_mul(limit, 2);
  }
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m1;
}

Int NumericalSemigroup::multiplicity() const {
  return *std::min_element(gens_.begin(), gens_.end());
}

bool NumericalSemigroup::first_gen_is_multiplicity() const {
  return gens_[0] == multiplicity();
}

bool NumericalSemigroup::contains(Int b) const {
  if (b < 0) return false;
  return b >= apery_[static_cast<std::size_t>(b % gens_[0])];
}

Int NumericalSemigroup::s_degree(const Factorization& f) const {
  if (f.size() != ngens()) fail(Err::NotMember, "exponent vector length mismatch");
  Int d = 0;
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] < 0) fail(Err::NotMember, "negative exponent");
    d = checked_add(d, checked_mul(f[i], gens_[static_cast<std::size_t>(i)]));
  }
  return d;
}

std::string NumericalSemigroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens_[i]);
  }
  return s + ">";
}

std::vector<Factorization> weighted_factorizations(const std::vector<Int>& w, Int b) {
  std::vector<Factorization> out;
  for (Int x : w)
    if (x <= 0) fail(Err::NonPositive, "weight " + std::to_string(x));
  if (b < 0) return out;
  if (b > kDpCap) fail(Err::Overflow, "degree too large for enumeration table");
  int n = static_cast<int>(w.size());
  if (n == 0) {
    if (b == 0) out.emplace_back();
    return out;
  }

  // reach[j][r]: r is representable by weights j..n-1 alone.
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(n) + 1);
  reach[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(b) + 1, 0);
  reach[static_cast<std::size_t>(n)][0] = 1;
  for (int j = n - 1; j >= 0; --j) {
    auto& row = reach[static_cast<std::size_t>(j)];
    row = reach[static_cast<std::size_t>(j) + 1];
    for (Int r = w[static_cast<std::size_t>(j)]; r <= b; ++r)
      if (row[static_cast<std::size_t>(r - w[static_cast<std::size_t>(j)])])
        row[static_cast<std::size_t>(r)] = 1;
  }
  if (!reach[0][static_cast<std::size_t>(b)]) return out;

  Factorization cur;
  cur.v.assign(static_cast<std::size_t>(n), 0);
  // DFS with ascending exponent of the current variable; suffix reachability
  // prunes dead branches, so the cost is proportional to the output.
  auto dfs = [&](auto&& self, int j, Int rem) -> void {
    if (j == n) {
      out.push_back(cur);
      return;
    }
    Int wj = w[static_cast<std::size_t>(j)];
    for (Int c = 0; c * wj <= rem; ++c) {
      if (reach[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(rem - c * wj)]) {
        cur[j] = c;
        self(self, j + 1, rem - c * wj);
      }
    }
    cur[j] = 0;
  };
  dfs(dfs, 0, b);
  return out;
}

std::vector<Factorization> factorizations(const NumericalSemigroup& S, Int b) {
  if (b < 0 || !S.contains(b)) return {};
  return weighted_factorizations(S.generators(), b);
}

Int factorization_count(const NumericalSemigroup& S, Int b) {
  if (b < 0) return 0;
  if (b > kDpCap) fail(Err::Overflow, "degree too large for counting table");
  std::vector<Int> ways(static_cast<std::size_t>(b) + 1, 0);
  ways[0] = 1;
  for (Int g : S.generators())
    for (Int r = g; r <= b; ++r)
      ways[static_cast<std::size_t>(r)] = checked_add(
          ways[static_cast<std::size_t>(r)], ways[static_cast<std::size_t>(r - g)]);
  return ways[static_cast<std::size_t>(b)];
}

Int order(const NumericalSemigroup& S, Int b) {
  if (!S.contains(b))
    fail(Err::NotMember, std::to_string(b) + " not in " + S.to_string());
  std::vector<Int> ord(static_cast<std::size_t>(b) + 1, -1);
  ord[0] = 0;
  for (Int r = 1; r <= b; ++r)
    for (Int g : S.generators())
      if (r >= g && ord[static_cast<std::size_t>(r - g)] >= 0)
        ord[static_cast<std::size_t>(r)] =
            std::max(ord[static_cast<std::size_t>(r)], ord[static_cast<std::size_t>(r - g)] + 1);
  return ord[static_cast<std::size_t>(b)];
}

namespace {
void validate_lift_k(const NumericalSemigroup& S, Int k) {
  if (k <= 0) fail(Err::NonPositive, "lifting parameter k = " + std::to_string(k));
  if (std::gcd(k, S.generators()[0]) != 1)
    fail(Err::KNotCoprime, "gcd(k, m_1) = " + std::to_string(std::gcd(k, S.generators()[0])));
}
}  // namespace

NumericalSemigroup lift(const NumericalSemigroup& S, Int k) {
  validate_lift_k(S, k);
  std::vector<Int> gens = S.generators();
  for (std::size_t i = 1; i < gens.size(); ++i) gens[i] = checked_mul(k, gens[i]);
  return NumericalSemigroup(std::move(gens));
}

Int lift_element(const NumericalSemigroup& S, Int k, Int b) {
  validate_lift_k(S, k);
  if (!S.contains(b))
    fail(Err::NotMember, std::to_string(b) + " not in " + S.to_string());
  return checked_mul(k, b);
}

Factorization lift_factorization(const NumericalSemigroup& S, Int k,
                                 const Factorization& v) {
  validate_lift_k(S, k);
  if (v.size() != S.ngens()) fail(Err::NotMember, "exponent vector length mismatch");
  for (int i = 0; i < v.size(); ++i)
    if (v[i] < 0) fail(Err::NotMember, "negative exponent");
  Factorization w = v;
  w[0] = checked_mul(k, w[0]);
  return w;
}

std::vector<Int> minimalized_generators(std::vector<Int> gens) {
  for (Int g : gens)
    if (g <= 0) fail(Err::NonPositive, "generator " + std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (;;) {
    bool removed = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      std::vector<Int> others;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != j) others.push_back(gens[i]);
      if (representable(gens[j], others)) {
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(j));
        removed = true;
        break;
      }
    }
    if (!removed) return gens;
  }
}

}  // namespace liftlab
