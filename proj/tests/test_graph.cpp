#include <doctest.h>

#include <random>

#include "balfair/errors.hpp"
#include "balfair/exchange_graph.hpp"
#include "fixtures.hpp"

using namespace balfair;
using fixtures::alloc;
using fixtures::vec;

TEST_CASE("graph shape") {
  const auto inst = fixtures::running_example();
  const auto g = build_exchange_graph(inst, alloc({{1, 3}, {2, 4}}), vec({1, 2}));
  CHECK(g.num_nodes() == 7);
  CHECK(g.arcs().size() == 8 + 4 + 4);
  CHECK(g.weight(g.agent_node(1), g.good_node(3)) == Rational(-16));
  CHECK(g.weight(g.good_node(3), g.agent_node(1)) == Rational(16));
  CHECK_FALSE(g.weight(g.good_node(3), g.agent_node(0)));
  CHECK(g.weight(g.root(), g.good_node(0)) == Rational(0));
  CHECK(g.label(g.agent_node(1)) == "agent 2");
  CHECK(g.label(g.good_node(0)) == "good 1");
  CHECK(g.label(g.root()) == "root");
  CHECK_THROWS_AS(build_exchange_graph(inst, alloc({{1, 3}, {2, 4}}), vec({1, 0})), InvalidArgument);
  CHECK_THROWS_AS(build_exchange_graph(inst, alloc({{1, 2, 3}, {4}}), vec({1, 1})), InvalidArgument);
}

TEST_CASE("negative cycle on a suboptimal allocation") {
  const auto inst = fixtures::running_example();
  const auto g = build_exchange_graph(inst, alloc({{1, 2}, {3, 4}}), vec({1, 1}));
  const auto cycle = detect_negative_cycle(g);
  REQUIRE(cycle);
  CHECK(cycle_weight(g, *cycle) < 0);
  for (std::size_t t = 0; t < cycle->size(); ++t) {
    CHECK(g.weight((*cycle)[t], (*cycle)[(t + 1) % cycle->size()]));
  }
  CHECK_THROWS_AS(compute_potentials(inst, alloc({{1, 2}, {3, 4}}), vec({1, 1})), NegativeCycleError);
}

TEST_CASE("potentials at the utilitarian optimum") {
  const auto inst = fixtures::running_example();
  CHECK(fixtures::max_welfare(inst, vec({1, 1})) == 44);
  const auto best = alloc({{3, 4}, {1, 2}});
  CHECK_FALSE(detect_negative_cycle(build_exchange_graph(inst, best, vec({1, 1}))));
  const auto pot = compute_potentials(inst, best, vec({1, 1}));
  CHECK(pot.objective(2) == 44);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(pot.q(i) + pot.p(j) >= inst.value(i, j));
  }
}

TEST_CASE("optimality iff no negative cycle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % (n == 3 ? 3 : 4));
    const auto inst = fixtures::random_instance(rng, n, n * k, 6);
    const auto alpha = fixtures::random_alpha(rng, n);
    const Rational best = fixtures::max_welfare(inst, alpha);
    for (const auto& a : fixtures::owner_permutations(n, k)) {
      const auto g = build_exchange_graph(inst, a, alpha);
      const auto cycle = detect_negative_cycle(g);
      CHECK(!cycle.has_value() == (weighted_welfare(inst, a, alpha) == best));
      if (cycle) {
        CHECK(cycle_weight(g, *cycle) < 0);
      } else {
        CHECK(compute_potentials(inst, a, alpha).objective(k) == best);
      }
    }
  }
}
