#include <doctest.h>

#include <random>

#include "balfair/errors.hpp"
#include "balfair/verify.hpp"
#include "fixtures.hpp"

using namespace balfair;
using fixtures::alloc;
using fixtures::vec;

namespace {

// EF1 straight from the definition: try removing every good of the other
// bundle (or none when it is empty).
bool ef1_oracle(const Instance& inst, const Allocation& a) {
  for (int i = 0; i < inst.num_agents(); ++i) {
    const Rational own = bundle_value(inst, i, a.bundle(i));
    for (int h = 0; h < inst.num_agents(); ++h) {
      const auto& b = a.bundle(h);
      if (h == i || b.empty()) continue;
      bool ok = false;
      for (std::size_t drop = 0; drop < b.size(); ++drop) {
        Rational rest;
        for (std::size_t t = 0; t < b.size(); ++t) {
          if (t != drop) rest += inst.value(i, b[t]);
        }
        ok = ok || own >= rest;
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("EF1 flags on the running example") {
  const auto inst = fixtures::running_example();
  CHECK(is_ef1(inst, alloc({{1, 3}, {2, 4}})));
  CHECK(is_ef1(inst, alloc({{1, 4}, {2, 3}})));
  const auto v = is_ef1(inst, alloc({{1, 2}, {3, 4}}));
  REQUIRE_FALSE(v);
  const auto& w = std::get<EnvyWitness>(*v.witness);
  CHECK(w.envious == 0);
  CHECK(w.envied == 1);
  CHECK(w.removed_good == 3);
  CHECK(w.own_value == 20);
  CHECK(w.other_value_minus_best == 21);
  CHECK(describe(*v.witness) == "agent 1 envies agent 2 beyond one good: 20 < 21 (after removing good 4)");
}

TEST_CASE("EF1 matches the definition, balanced or not") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 7);
    const auto inst = fixtures::random_instance(rng, n, m, 9);
    std::vector<int> owner(m);
    for (int& o : owner) o = static_cast<int>(rng() % n);
    const auto a = Allocation::from_owners(owner, n);
    CHECK(static_cast<bool>(is_ef1(inst, a)) == ef1_oracle(inst, a));
  }
}

TEST_CASE("price EF1") {
  const Vector p = vec({0, Rational(3, 2), 11, 12});
  CHECK(is_p_ef1(p, alloc({{1, 3}, {2, 4}})));
  const auto v = is_p_ef1(p, alloc({{1, 2}, {3, 4}}));
  REQUIRE_FALSE(v);
  const auto& w = std::get<PriceEnvyWitness>(*v.witness);
  CHECK(w.price == Rational(3, 2));
  CHECK(w.other_price_hat == 11);
  CHECK(price_hat(p, {2, 3}) == 11);
  CHECK_THROWS_AS(price_hat(p, {}), InvalidArgument);
  CHECK_THROWS_AS(is_p_ef1(p, alloc({{1, 2, 3, 4}, {}})), InvalidArgument);
}

TEST_CASE("PO by enumeration") {
  const auto inst = fixtures::running_example();
  CHECK(is_po_bruteforce(inst, alloc({{1, 4}, {2, 3}})));
  const auto v = is_po_bruteforce(inst, alloc({{2, 4}, {1, 3}}));
  REQUIRE_FALSE(v);
  const auto& w = std::get<DominationWitness>(*v.witness);
  CHECK(w.dominator == alloc({{1, 4}, {2, 3}}));
  CHECK(w.dominator_values == vec({32, 7}));
  CHECK(w.values == vec({32, 6}));
  CHECK_THROWS_AS(is_po_bruteforce(fixtures::from_rows({{1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}),
                                   Allocation::from_owners(std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3}, 4), 1000),
                  TooLarge);
}

TEST_CASE("fPO certificate") {
  const auto inst = fixtures::running_example();
  CHECK(certify_fpo(inst, alloc({{1, 3}, {2, 4}}), vec({1, Rational(3, 2)})));
  const auto v = certify_fpo(inst, alloc({{1, 4}, {2, 3}}), vec({1, 1}));
  REQUIRE_FALSE(v);
  const auto& w = std::get<CycleWitness>(*v.witness);
  CHECK(w.weight < 0);
  CHECK(describe(*v.witness).rfind("negative cycle of weight -", 0) == 0);
}

TEST_CASE("Pareto domination") {
  CHECK(pareto_dominates(vec({2, 3}), vec({2, 2})));
  CHECK_FALSE(pareto_dominates(vec({2, 2}), vec({2, 2})));
  CHECK_FALSE(pareto_dominates(vec({3, 1}), vec({2, 2})));
}
