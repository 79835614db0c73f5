#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "common.hpp"
#include "liftlab/toric.hpp"
#include "oracles.hpp"

using namespace liftlab;
using testutil::fac;

namespace {

std::vector<std::string> texts(const std::vector<Binomial>& bs) {
  std::vector<std::string> out;
  for (const auto& b : bs) out.push_back(b.text());
  return out;
}

std::vector<Int> gen_degrees(const NumericalSemigroup& S, const std::vector<Binomial>& bs) {
  std::vector<Int> out;
  for (const auto& b : bs) out.push_back(S.s_degree(b.lhs));
  return out;
}

}  // namespace

TEST_CASE("binomial orientation and rendering") {
  auto b = Binomial::make(fac({5, 0}), fac({0, 3}));
  CHECK(b.lhs == fac({0, 3}));
  CHECK(b.rhs == fac({5, 0}));
  CHECK(b.text() == "x2^3 - x1^5");
  // Argument order is irrelevant.
  CHECK(Binomial::make(fac({0, 3}), fac({5, 0})) == b);
  CHECK(Binomial::make(fac({1, 0, 1}), fac({0, 3, 0})).text() == "x2^3 - x1x3");
  CHECK_ERR(Binomial::make(fac({1, 2}), fac({1, 2})), Err::NotMember);
}

TEST_CASE("fiber graphs: vertices, components") {
  NumericalSemigroup S({4, 6, 9});
  auto g18 = degree_graph(S, 18);
  REQUIRE(g18.vertices.size() == 3);
  CHECK(g18.vertices[0] == fac({0, 0, 2}));
  CHECK(g18.vertices[1] == fac({0, 3, 0}));
  CHECK(g18.vertices[2] == fac({3, 1, 0}));
  REQUIRE(g18.components.size() == 2);
  CHECK(g18.components[0] == std::vector<int>{0});
  CHECK(g18.components[1] == std::vector<int>{1, 2});

  auto g12 = degree_graph(S, 12);
  REQUIRE(g12.components.size() == 2);  // x2^2 | x1^3, disjoint supports

  // <4,11,29> at 44: x1^11, x2^4 and x1x2x3 all connect through x1x2x3.
  auto g44 = degree_graph(NumericalSemigroup({4, 11, 29}), 44);
  REQUIRE(g44.vertices.size() == 3);
  CHECK(g44.components.size() == 1);

  CHECK(degree_graph(S, 7).vertices.empty());  // nonmember: empty fiber
}

TEST_CASE("betti degree bound is F(S) plus the generator sum") {
  CHECK(betti_degree_bound(NumericalSemigroup({3, 4, 5})) == 14);
  CHECK(betti_degree_bound(NumericalSemigroup({4, 6, 9})) == 30);
  CHECK(betti_degree_bound(NumericalSemigroup({3, 5})) == 15);
  CHECK(betti_degree_bound(NumericalSemigroup({4, 11, 29})) == 69);
}

TEST_CASE("minimal generators of the toric ideal: worked semigroups") {
  NumericalSemigroup s345({3, 4, 5});
  auto g345 = minimal_generators(s345);
  CHECK(texts(g345) == std::vector<std::string>{"x2^2 - x1x3", "x2x3 - x1^3",
                                                "x3^2 - x1^2x2"});
  CHECK(gen_degrees(s345, g345) == std::vector<Int>{8, 9, 10});

  NumericalSemigroup s469({4, 6, 9});
  auto g469 = minimal_generators(s469);
  CHECK(texts(g469) == std::vector<std::string>{"x2^2 - x1^3", "x3^2 - x2^3"});
  CHECK(gen_degrees(s469, g469) == std::vector<Int>{12, 18});

  auto g35 = minimal_generators(NumericalSemigroup({3, 5}));
  CHECK(texts(g35) == std::vector<std::string>{"x2^3 - x1^5"});

  NumericalSemigroup s41129({4, 11, 29});
  auto g = minimal_generators(s41129);
  CHECK(texts(g) == std::vector<std::string>{"x2^3 - x1x3", "x2x3 - x1^10",
                                             "x3^2 - x1^9x2^2"});
  CHECK(gen_degrees(s41129, g) == std::vector<Int>{33, 40, 58});

  // The degree multiset view agrees.
  CHECK(betti1_degrees(s345) == std::vector<Int>{8, 9, 10});
  CHECK(betti1_degrees(s469) == std::vector<Int>{12, 18});
  CHECK(betti1_degrees(s41129) == std::vector<Int>{33, 40, 58});
}

TEST_CASE("indispensable binomials: two-element disjoint-support fibers") {
  auto i345 = indispensable_binomials(NumericalSemigroup({3, 4, 5}));
  CHECK(texts(i345) == std::vector<std::string>{"x2^2 - x1x3", "x2x3 - x1^3",
                                                "x3^2 - x1^2x2"});
  auto i469 = indispensable_binomials(NumericalSemigroup({4, 6, 9}));
  CHECK(texts(i469) == std::vector<std::string>{"x2^2 - x1^3"});
  auto i41129 = indispensable_binomials(NumericalSemigroup({4, 11, 29}));
  CHECK(i41129.size() == 3);  // every generator is indispensable here
  CHECK(texts(indispensable_binomials(NumericalSemigroup({3, 5}))) ==
        std::vector<std::string>{"x2^3 - x1^5"});
}

TEST_CASE("generator structure properties on random semigroups") {
  std::mt19937_64 rng(606060);
  for (int trial = 0; trial < 12; ++trial) {
    auto gens = oracle::random_semigroup_gens(rng, 4, 24);
    NumericalSemigroup S(gens);
    auto mg = minimal_generators(S);
    for (const auto& b : mg) {
      CHECK(S.s_degree(b.lhs) == S.s_degree(b.rhs));
      CHECK(b.lhs < b.rhs);
      CHECK(S.s_degree(b.lhs) <= betti_degree_bound(S));
    }
    // Per degree, the number of generators is components - 1.
    auto degs = betti1_degrees(S);
    std::vector<Int> uniq(degs);
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (Int d : uniq) {
      auto graph = degree_graph(S, d);
      auto copies = std::count(degs.begin(), degs.end(), d);
      CHECK(copies == static_cast<Int>(graph.components.size()) - 1);
    }
    // Indispensables form a subset of the minimal generators.
    for (const auto& ind : indispensable_binomials(S))
      CHECK(std::find(mg.begin(), mg.end(), ind) != mg.end());
  }
}

TEST_CASE("congruence modulo lower degrees matches fiber-graph components") {
  std::mt19937_64 rng(112358);
  int interesting = 0;
  for (int trial = 0; trial < 40 && interesting < 12; ++trial) {
    auto gens = oracle::random_semigroup_gens(rng, 3, 14);
    NumericalSemigroup S(gens);
    for (Int b = 1; b <= betti_degree_bound(S); ++b) {
      auto graph = degree_graph(S, b);
      if (graph.vertices.size() < 2 || graph.vertices.size() > 8) continue;
      ++interesting;
      std::vector<int> comp_of(graph.vertices.size());
      for (int c = 0; c < static_cast<int>(graph.components.size()); ++c)
        for (int v : graph.components[static_cast<std::size_t>(c)])
          comp_of[static_cast<std::size_t>(v)] = c;
      for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < graph.vertices.size(); ++j) {
          bool same = comp_of[i] == comp_of[j];
          CHECK(lower_degree_membership(S, graph.vertices[i], graph.vertices[j]) == same);
        }
      if (interesting >= 12) break;
    }
  }
  CHECK(interesting >= 12);
  CHECK_ERR(lower_degree_membership(NumericalSemigroup({3, 5}), fac({1, 0}), fac({0, 1})),
            Err::NotMember);
}

TEST_CASE("binomial transport along lifting") {
  NumericalSemigroup s35({3, 5});
  auto g = minimal_generators(s35)[0];
  CHECK(lift_binomial(s35, 2, g).text() == "x2^3 - x1^10");
  CHECK_ERR(lift_binomial(s35, 3, g), Err::KNotCoprime);
  CHECK_ERR(lift_binomial(s35, 0, g), Err::NonPositive);

  // Both sides using x_1 cannot transport.
  NumericalSemigroup s23({2, 3});
  auto both = Binomial::make(fac({2, 2}), fac({5, 0}));  // degrees 10 = 10
  CHECK_ERR(lift_binomial(s23, 3, both), Err::NotCoprimeMonomials);
  // Mismatched degrees are rejected before anything else about the shape.
  CHECK_ERR(lift_binomial(s35, 2, Binomial{fac({1, 0}), fac({0, 1})}), Err::NotMember);

  NumericalSemigroup s41129({4, 11, 29});
  auto lifted = std::vector<Binomial>{};
  for (const auto& b : minimal_generators(s41129))
    lifted.push_back(lift_binomial(s41129, 3, b));
  CHECK(texts(lifted) == std::vector<std::string>{"x2^3 - x1^3x3", "x2x3 - x1^30",
                                                  "x3^2 - x1^27x2^2"});
  CHECK(minimal_generators(lift(s41129, 3)) == lifted);
}

TEST_CASE("lifting transports minimal generators and indispensables exactly") {
  std::mt19937_64 rng(8675309);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = oracle::random_semigroup_gens(rng, 3, 20);
    NumericalSemigroup S(gens);
    for (Int k : testutil::valid_k_upto(S.multiplicity(), 3)) {
      NumericalSemigroup Sk = lift(S, k);
      std::vector<Binomial> mg_lifted, ind_lifted;
      for (const auto& b : minimal_generators(S)) mg_lifted.push_back(lift_binomial(S, k, b));
      for (const auto& b : indispensable_binomials(S))
        ind_lifted.push_back(lift_binomial(S, k, b));
      CHECK(minimal_generators(Sk) == mg_lifted);
      CHECK(indispensable_binomials(Sk) == ind_lifted);
      // Degrees scale by k.
      auto scaled = betti1_degrees(S);
      for (Int& d : scaled) d *= k;
      CHECK(betti1_degrees(Sk) == scaled);
    }
  }
}
