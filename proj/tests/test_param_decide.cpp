#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rga/param_decide.hpp"

using rga::DecidePath;
using rga::Graph;
using rga::VertexSet;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle5() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(0, 4);
  return g;
}

}  // namespace

TEST_CASE("level_threshold") {
  // 1/(1-p-eps) = 4: (1/3) * log4
  REQUIRE(rga::level_threshold(256, 0.5, 0.25) == Catch::Approx(4.0 / 3.0));
  REQUIRE(rga::level_threshold(1, 0.5, 0.25) == 0.0);
  REQUIRE(rga::level_threshold(1024, 0.5, 0.25) == Catch::Approx(5.0 / 3.0));
  REQUIRE_THROWS_AS(rga::level_threshold(10, 0.8, 0.3), std::invalid_argument);
  REQUIRE_THROWS_AS(rga::level_threshold(0, 0.5, 0.25), std::invalid_argument);
}

TEST_CASE("greedy_peel stops at n^(2/3) of the original size") {
  // edgeless n=9: 9^(2/3) ~ 4.33, one vertex removed per step
  REQUIRE(rga::greedy_peel(Graph(9)) == VertexSet{0, 1, 2, 3, 4});
  // K5: first pick wipes the graph
  REQUIRE(rga::greedy_peel(complete(5)) == VertexSet{0});
  // K_{1,4}: leaf 1 goes first (min degree), taking the center with it,
  // then one isolated leaf; 2 vertices <= 5^(2/3) remain.
  Graph star(5);
  for (int v = 1; v <= 4; ++v) star.add_edge(0, v);
  REQUIRE(rga::greedy_peel(star) == VertexSet{1, 2});
}

TEST_CASE("greedy_peel output is independent and nonempty") {
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 25;
    const Graph g = rga::generate({n, 0.5, 300 + static_cast<std::uint64_t>(t)});
    const VertexSet peeled = rga::greedy_peel(g);
    REQUIRE(rga::is_independent(g, peeled));
    REQUIRE(peeled.size() >= 1);
  }
}

TEST_CASE("peeling a 512-vertex graph almost always reaches the threshold size") {
  // ceil((1/3) log4 512) = 2; expect at least 99% of 200 seeds to reach it.
  int ok = 0;
  for (int t = 0; t < 200; ++t) {
    const Graph g = rga::generate({512, 0.5, 7000 + static_cast<std::uint64_t>(t)});
    if (rga::greedy_peel(g).size() >= 2) ++ok;
  }
  REQUIRE(ok >= 198);
}

TEST_CASE("decide on the fixed examples") {
  const auto no = rga::decide_k_independent(complete(4), 2, 0.5, 0.25);
  REQUIRE_FALSE(no.answer);
  REQUIRE_FALSE(no.witness.has_value());

  const auto yes = rga::decide_k_independent(Graph(5), 5, 0.5, 0.25);
  REQUIRE(yes.answer);
  REQUIRE(yes.witness == VertexSet{0, 1, 2, 3, 4});

  // C5, k=2: threshold (1/3) log4 5 < 2, so direct enumeration; the first
  // independent pair in counter order is {0,2}.
  const auto c5 = rga::decide_k_independent(cycle5(), 2, 0.5, 0.25);
  REQUIRE(c5.answer);
  REQUIRE(c5.path_taken == DecidePath::large_k_enumeration);
  REQUIRE(c5.witness == VertexSet{0, 2});
}

TEST_CASE("decide edge conventions") {
  const Graph g = rga::generate({6, 0.5, 2});
  const auto zero = rga::decide_k_independent(g, 0, 0.5, 0.25);
  REQUIRE(zero.answer);
  REQUIRE(zero.witness);
  REQUIRE(zero.witness->empty());

  const auto too_big = rga::decide_k_independent(g, 7, 0.5, 0.25);
  REQUIRE_FALSE(too_big.answer);

  REQUIRE(rga::decide_k_independent(Graph(0), 0, 0.5, 0.25).answer);
  REQUIRE_FALSE(rga::decide_k_independent(Graph(0), 1, 0.5, 0.25).answer);
  REQUIRE_THROWS_AS(rga::decide_k_independent(g, 2, 0.8, 0.3), std::invalid_argument);
}

TEST_CASE("decide exercises all three paths") {
  // Large k relative to the threshold: enumeration.
  const Graph g = rga::generate({10, 0.5, 11});
  const auto enumerated = rga::decide_k_independent(g, 3, 0.5, 0.25);
  REQUIRE(enumerated.path_taken == DecidePath::large_k_enumeration);

  // Low k on a big sparse-ish graph: peeling succeeds.
  const Graph big = rga::generate({100, 0.3, 5});
  const auto greedy = rga::decide_k_independent(big, 1, 0.3, 0.15);
  REQUIRE(greedy.answer);
  REQUIRE(greedy.path_taken == DecidePath::greedy_success);
  REQUIRE(greedy.witness->size() == 1);

  // Peeling cannot reach k=2 on a complete graph, and enumeration then
  // settles the (negative) answer. L(40) for p=0.3, eps=0.15 is ~2.06 >= 2.
  const auto failed = rga::decide_k_independent(complete(40), 2, 0.3, 0.15);
  REQUIRE_FALSE(failed.answer);
  REQUIRE(failed.path_taken == DecidePath::greedy_fail_enumeration);
}

TEST_CASE("decide matches the oracle across all k") {
  for (double p : {0.3, 0.5, 0.7}) {
    const double eps = rga::EpsilonConfig::default_epsilon(p);
    for (int t = 0; t < 10; ++t) {
      const int n = 4 + t;  // 4..13
      const Graph g = rga::generate({n, p, 600 + static_cast<std::uint64_t>(t)});
      const int alpha = static_cast<int>(rga::brute_force_mis(g).size());
      for (int k = 1; k <= n; ++k) {
        const auto out = rga::decide_k_independent(g, k, p, eps);
        REQUIRE(out.answer == (alpha >= k));
        if (out.answer) {
          REQUIRE(out.witness);
          REQUIRE(static_cast<int>(out.witness->size()) == k);
          REQUIRE(rga::is_independent(g, *out.witness));
        } else {
          REQUIRE_FALSE(out.witness.has_value());
        }
      }
    }
  }
}

TEST_CASE("enumeration path returns the counter-order-first witness") {
  for (int t = 0; t < 8; ++t) {
    const Graph g = rga::generate({9, 0.5, 50 + static_cast<std::uint64_t>(t)});
    const int alpha = static_cast<int>(rga::brute_force_mis(g).size());
    for (int k = 2; k <= alpha; ++k) {
      const auto out = rga::decide_k_independent(g, k, 0.5, 0.25);
      if (!out.answer || out.path_taken == DecidePath::greedy_success) continue;
      // recompute the first independent size-k subset by scanning raw masks
      VertexSet expected;
      for (std::uint64_t mask = 0; mask < (1u << 9) && expected.empty(); ++mask) {
        if (std::popcount(mask) != k) continue;
        VertexSet s;
        for (int v = 0; v < 9; ++v)
          if ((mask >> v) & 1) s.push_back(v);
        if (rga::is_independent(g, s)) expected = s;
      }
      REQUIRE(out.witness == expected);
    }
  }
}
