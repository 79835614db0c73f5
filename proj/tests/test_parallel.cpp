#include <doctest.h>

#include <atomic>
#include <random>
#include <vector>

#include "common.hpp"
#include "liftlab/betti.hpp"
#include "liftlab/cm.hpp"
#include "liftlab/parallel.hpp"
#include "liftlab/tangent_cone.hpp"
#include "liftlab/toric.hpp"
#include "oracles.hpp"

using namespace liftlab;

TEST_CASE("parallel_for fills per-index slots deterministically") {
  for (int threads : {0, 1, 2, 8}) {
    std::vector<Int> out(500, -1);
    parallel_for(static_cast<Int>(out.size()), Exec{threads},
                 [&](Int i) { out[static_cast<std::size_t>(i)] = i * i; });
    for (Int i = 0; i < 500; ++i) CHECK(out[static_cast<std::size_t>(i)] == i * i);
  }
  // Zero iterations is a no-op.
  parallel_for(0, Exec{4}, [&](Int) { CHECK(false); });
}

TEST_CASE("parallel_for propagates the lowest-index exception") {
  for (int threads : {1, 4}) {
    bool caught = false;
    try {
      parallel_for(100, Exec{threads}, [&](Int i) {
        if (i % 10 == 3) fail(Err::NotMember, "index " + std::to_string(i));
      });
    } catch (const Error& e) {
      caught = true;
      CHECK(e.code() == Err::NotMember);
      CHECK(std::string(e.what()).find("index 3") != std::string::npos);
    }
    CHECK(caught);
  }
}

TEST_CASE("thread count never changes any analysis result") {
  std::mt19937_64 rng(0xFEEDFACE);
  std::vector<std::vector<Int>> samples = {{4, 11, 29}};
  for (int trial = 0; trial < 3; ++trial)
    samples.push_back(oracle::random_semigroup_gens(rng, 4, 22));
  for (const auto& gens : samples) {
    NumericalSemigroup S(gens);
    auto mg = ref::minimal_generators_serial(S);
    auto ind = ref::indispensable_binomials_serial(S);
    auto deg = ref::betti1_degrees_serial(S);
    auto table = ref::betti_table_serial(S);
    for (int threads : {0, 1, 2, 8}) {
      Exec ex{threads};
      CHECK(minimal_generators(S, ex) == mg);
      CHECK(indispensable_binomials(S, ex) == ind);
      CHECK(betti1_degrees(S, ex) == deg);
      CHECK(betti_table(S, ex) == table);
    }
  }
}
