#include "liftlab/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "liftlab/exact_linalg.hpp"

namespace liftlab {

Binomial Binomial::make(Factorization a, Factorization b) {
  if (a == b) fail(Err::NotMember, "binomial with equal sides");
  Binomial B;
  if (a < b) {
    B.lhs = std::move(a);
    B.rhs = std::move(b);
  } else {
    B.lhs = std::move(b);
    B.rhs = std::move(a);
  }
  return B;
}

std::string Binomial::text() const {
  return monomial_text(lhs) + " - " + monomial_text(rhs);
}

FiberGraph degree_graph(const NumericalSemigroup& S, Int b) {
  FiberGraph G;
  G.degree = b;
  G.vertices = factorizations(S, b);
  int m = static_cast<int>(G.vertices.size());
  if (m == 0) return G;

  // Union-find; monomials sharing a variable form a clique per variable.
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int c) {
    a = find(a);
    c = find(c);
    if (a != c) parent[static_cast<std::size_t>(std::max(a, c))] = std::min(a, c);
  };
  for (int var = 0; var < S.ngens(); ++var) {
    int first = -1;
    for (int i = 0; i < m; ++i) {
      if (G.vertices[static_cast<std::size_t>(i)][var] == 0) continue;
      if (first < 0)
        first = i;
      else
        unite(first, i);
    }
  }

  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < m; ++i) comps[find(i)].push_back(i);
  for (auto& [root, members] : comps) G.components.push_back(std::move(members));
  return G;
}

Int betti_degree_bound(const NumericalSemigroup& S) {
  Int sum = 0;
  for (Int g : S.generators()) sum = checked_add(sum, g);
  return checked_add(S.frobenius(), sum);
}

namespace {

std::vector<Int> member_degrees_up_to(const NumericalSemigroup& S, Int bound) {
  std::vector<Int> out;
  for (Int b = 1; b <= bound; ++b)
    if (S.contains(b)) out.push_back(b);
  return out;
}

std::vector<Binomial> generators_at_degree(const NumericalSemigroup& S, Int b) {
  std::vector<Binomial> out;
  FiberGraph G = degree_graph(S, b);
  for (std::size_t j = 1; j < G.components.size(); ++j) {
    const Factorization& other =
        G.vertices[static_cast<std::size_t>(G.components[j][0])];
    out.push_back(Binomial::make(G.vertices[0], other));
  }
  return out;
}

std::vector<Binomial> indispensables_at_degree(const NumericalSemigroup& S, Int b) {
  std::vector<Binomial> out;
  auto fib = factorizations(S, b);
  if (fib.size() == 2 && disjoint_support(fib[0], fib[1]))
    out.push_back(Binomial::make(fib[0], fib[1]));
  return out;
}

template <class PerDegree>
auto over_degrees(const NumericalSemigroup& S, const Exec& ex, PerDegree per)
    -> std::vector<decltype(per(S, Int{0}))> {
  auto degrees = member_degrees_up_to(S, betti_degree_bound(S));
  std::vector<decltype(per(S, Int{0}))> slots(degrees.size());
  parallel_for(degrees.size(), ex,
               [&](std::size_t i) { slots[i] = per(S, degrees[i]); });
  return slots;
}

template <class T>
std::vector<T> concat(std::vector<std::vector<T>> slots) {
  std::vector<T> out;
  for (auto& s : slots)
    for (auto& x : s) out.push_back(std::move(x));
  return out;
}

}  // namespace

std::vector<Int> betti1_degrees(const NumericalSemigroup& S, const Exec& ex) {
  std::vector<Int> out;
  auto slots = over_degrees(S, ex, generators_at_degree);
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (const Binomial& B : slots[i]) out.push_back(S.s_degree(B.lhs));
  return out;
}

std::vector<Binomial> minimal_generators(const NumericalSemigroup& S, const Exec& ex) {
  return concat(over_degrees(S, ex, generators_at_degree));
}

std::vector<Binomial> indispensable_binomials(const NumericalSemigroup& S,
                                              const Exec& ex) {
  return concat(over_degrees(S, ex, indispensables_at_degree));
}

namespace ref {

std::vector<Int> betti1_degrees_serial(const NumericalSemigroup& S) {
  std::vector<Int> out;
  for (Int b = 1; b <= betti_degree_bound(S); ++b)
    if (S.contains(b))
      for (const Binomial& B : generators_at_degree(S, b)) out.push_back(S.s_degree(B.lhs));
  return out;
}

std::vector<Binomial> minimal_generators_serial(const NumericalSemigroup& S) {
  std::vector<Binomial> out;
  for (Int b = 1; b <= betti_degree_bound(S); ++b)
    if (S.contains(b))
      for (Binomial& B : generators_at_degree(S, b)) out.push_back(std::move(B));
  return out;
}

std::vector<Binomial> indispensable_binomials_serial(const NumericalSemigroup& S) {
  std::vector<Binomial> out;
  for (Int b = 1; b <= betti_degree_bound(S); ++b)
    if (S.contains(b))
      for (Binomial& B : indispensables_at_degree(S, b)) out.push_back(std::move(B));
  return out;
}

}  // namespace ref

Binomial lift_binomial(const NumericalSemigroup& S, Int k, const Binomial& B) {
  if (k <= 0) fail(Err::NonPositive, "lifting parameter k = " + std::to_string(k));
  if (std::gcd(k, S.generators()[0]) != 1)
    fail(Err::KNotCoprime,
         "gcd(k, m_1) = " + std::to_string(std::gcd(k, S.generators()[0])));
  if (S.s_degree(B.lhs) != S.s_degree(B.rhs))
    fail(Err::NotMember, "binomial sides have different S-degrees");
  if (B.lhs.size() > 0 && B.lhs[0] != 0 && B.rhs[0] != 0)
    fail(Err::NotCoprimeMonomials, "x1 occurs on both sides");
  Factorization a = B.lhs, b = B.rhs;
  if (a.size() > 0) a[0] = checked_mul(k, a[0]);
  if (b.size() > 0) b[0] = checked_mul(k, b[0]);
  return Binomial::make(std::move(a), std::move(b));
}

bool lower_degree_membership(const NumericalSemigroup& S, const Factorization& M,
                             const Factorization& N) {
  Int b = S.s_degree(M);
  if (S.s_degree(N) != b) fail(Err::NotMember, "monomials have different S-degrees");
  if (M == N) return true;

  auto basis = factorizations(S, b);
  auto index_of = [&](const Factorization& f) {
    auto it = std::lower_bound(basis.begin(), basis.end(), f);
    return static_cast<std::size_t>(it - basis.begin());
  };

  la::RowSpan span(basis.size());
  std::vector<Int> row(basis.size());
  for (Int d = 1; d < b; ++d) {
    if (!S.contains(d) || !S.contains(b - d)) continue;
    auto lower = factorizations(S, d);
    if (lower.size() < 2) continue;
    auto shifts = factorizations(S, b - d);
    for (const auto& P : shifts) {
      Factorization base = lower[0];
      for (int i = 0; i < base.size(); ++i) base[i] += P[i];
      for (std::size_t j = 1; j < lower.size(); ++j) {
        Factorization top = lower[j];
        for (int i = 0; i < top.size(); ++i) top[i] += P[i];
        std::fill(row.begin(), row.end(), 0);
        row[index_of(top)] += 1;
        row[index_of(base)] -= 1;
        span.insert_int(row);
      }
    }
  }
  std::fill(row.begin(), row.end(), 0);
  row[index_of(M)] += 1;
  row[index_of(N)] -= 1;
  return span.contains_int(row);
}

}  // namespace liftlab
