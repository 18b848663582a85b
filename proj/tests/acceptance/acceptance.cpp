// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

#include "balfair/bivalued.hpp"
#include "balfair/commands.hpp"
#include "balfair/errors.hpp"
#include "balfair/generate.hpp"
#include "balfair/io.hpp"
#include "balfair/lp.hpp"
#include "balfair/oracle.hpp"
#include "balfair/two_types.hpp"
#include "balfair/verify.hpp"

using namespace balfair;

namespace {

const char* kRunningExample = R"({"n": 2, "m": 4, "valuations": [[10, 10, 21, 22], [0, 1, 6, 8]]})";

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

Allocation alloc1(std::initializer_list<std::initializer_list<int>> bundles) {
  std::vector<Bundle> out;
  for (const auto& b : bundles) {
    Bundle bundle;
    for (int g : b) bundle.push_back(g - 1);
    out.push_back(bundle);
  }
  return Allocation(std::move(out));
}

Vector random_alpha(std::mt19937_64& rng, int n) {
  Vector a(n);
  for (int i = 0; i < n; ++i) a(i) = Rational(uniform_int(rng, 1, 6), uniform_int(rng, 1, 4));
  return a;
}

// EF1 from the definition, independent of verify.
bool ef1_by_definition(const Instance& inst, const Allocation& a) {
  for (int i = 0; i < inst.num_agents(); ++i) {
    const Rational own = bundle_value(inst, i, a.bundle(i));
    for (int h = 0; h < inst.num_agents(); ++h) {
      const auto& b = a.bundle(h);
      if (h == i || b.empty()) continue;
      bool ok = false;
      for (std::size_t drop = 0; drop < b.size() && !ok; ++drop) {
        ok = own >= bundle_value(inst, i, b) - inst.value(i, b[drop]);
      }
      if (!ok) return false;
    }
  }
  return true;
}

Outcome running_example_exactness() {
  Outcome out;
  const auto dir = std::filesystem::temp_directory_path() / ("balfair_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = (dir / "running.json").string();
  std::ofstream(path) << kRunningExample;

  std::ostringstream solved, report_text, err;
  out.require(cmd_solve({path, "two-types", std::nullopt, false, true}, solved, err) == kExitOk, "solve exit code");
  const auto result = result_from_json(Json::parse(solved.str()));
  out.require(result.allocation == alloc1({{1, 3}, {2, 4}}), "solver allocation");
  out.require(result.checks.all(), "solver checks");

  out.require(cmd_enumerate({path, "json", std::nullopt}, report_text, err) == kExitOk, "enumerate exit code");
  std::filesystem::remove_all(dir);
  const auto records = Json::parse(report_text.str())["records"];
  int ef1 = 0, fpo = 0, both = 0;
  for (const auto& r : records) {
    ef1 += r["ef1"].get<bool>();
    fpo += r["fpo"].get<bool>();
    both += r["ef1"].get<bool>() && r["fpo"].get<bool>();
  }
  out.require(records.size() == 6, "record count");
  out.require(ef1 == 4 && fpo == 3 && both == 1, "flag counts");

  const Instance inst = instance_from_json(Json::parse(kRunningExample));
  const auto po_only = alloc1({{1, 4}, {2, 3}});
  out.require(static_cast<bool>(is_po_bruteforce(inst, po_only)), "({1,4},{2,3}) PO");
  out.require(!check_fpo(inst, po_only).is_fpo(), "({1,4},{2,3}) not fPO");

  const auto report = full_report(inst);
  const auto& nash = report.nash_maximizer();
  out.require(nash.allocation == alloc1({{1, 2}, {3, 4}}) && nash.nash == 280 && !nash.ef1, "Nash maximizer");
  return out;
}

Outcome bivalued_suite() {
  Outcome out;
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500 && out.pass; ++trial) {
    const int n = uniform_int(rng, 2, 3);
    const int k = uniform_int(rng, 1, 3);
    const auto inst = generate_instance(GenClass::Bivalued, {0, n, n * k, 9, true}, rng);
    const auto params = *bivalued_params(inst);
    const auto r = solve_bivalued(inst);
    const std::string tag = "instance " + std::to_string(trial) + ": ";
    out.require(r.allocation.is_balanced(k), tag + "balanced");
    out.require(static_cast<bool>(is_ef1(inst, r.allocation)), tag + "EF1");
    out.require(check_bivalued_fpo(inst, r.allocation), tag + "bivalued fPO");
    out.require(check_fpo(inst, r.allocation).is_fpo(), tag + "LP fPO");
    for (int i = 0; i < n; ++i) {
      for (int h = 0; h < n; ++h) {
        out.require(high_count(inst, params, i, r.allocation.bundle(i)) >=
                        high_count(inst, params, i, r.allocation.bundle(h)) - 1,
                    tag + "high-good balance");
      }
    }
  }
  return out;
}

struct TwoTypeRuns {
  Outcome solver;
  Outcome lemma;  // p-EF1 at the certifying prices implies EF1
  int oracle_checked = 0;
  int pef1_holds = 0;
};

TwoTypeRuns two_types_suite() {
  TwoTypeRuns runs;
  std::mt19937_64 rng(4048);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform_int(rng, 1, 4);
    const int k = uniform_int(rng, 1, 8 / n);
    const auto inst = generate_instance(GenClass::TwoTypes, {0, n, n * k, 9, true}, rng);
    const std::string tag = "instance " + std::to_string(trial) + ": ";
    TwoTypesTrace trace;
    std::optional<TwoTypesResult> r;
    try {
      r = solve_two_types(inst, &trace);
    } catch (const InvariantViolation& e) {
      runs.solver.require(false, tag + e.what());
      continue;
    }
    for (const auto& e : trace.entries) runs.solver.require(e.conditions.a || e.conditions.b, tag + "(a) and (b) both fail");
    const bool ef1 = static_cast<bool>(is_ef1(inst, r->allocation));
    runs.solver.require(ef1, tag + "EF1");
    runs.solver.require(check_fpo(inst, r->allocation).is_fpo(), tag + "fPO");
    if (balanced_allocation_count(n, k) <= 10'000) {
      ++runs.oracle_checked;
      runs.solver.require(ef1_by_definition(inst, r->allocation) && is_fpo_by_hull(inst, r->allocation),
                          tag + "outside the oracle EF1 and fPO set");
    }
    if (n >= 2 && is_p_ef1(r->potentials.p, r->allocation)) {
      ++runs.pef1_holds;
      runs.lemma.require(ef1, tag + "p-EF1 without EF1");
    }
    for (const auto& e : trace.entries) {
      if (n >= 2 && is_p_ef1(e.prices, e.allocation)) {
        ++runs.pef1_holds;
        runs.lemma.require(static_cast<bool>(is_ef1(inst, e.allocation)), tag + "p-EF1 without EF1 in trace");
      }
    }
  }
  return runs;
}

Outcome duality_suite() {
  Outcome out;
  std::mt19937_64 rng(77);
  int with_ties = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 3);
    const int k = uniform_int(rng, 1, 3);
    const auto inst = generate_instance(GenClass::General, {0, n, n * k, trial % 2 ? 3 : 9, true}, rng);
    const Vector alpha = random_alpha(rng, n);
    const std::string tag = "pair " + std::to_string(trial) + ": ";

    const auto primal = solve_primal(inst, alpha);
    const auto dual = solve_dual(inst, alpha);
    out.require(primal.value == dual.objective(k), tag + "primal != dual");
    out.require(verify_complementary_slackness(inst, primal.x, dual, alpha).holds(), tag + "slackness (LP pair)");

    std::optional<Potentials> first;
    int optima = 0;
    for (const auto& a : enumerate_balanced(inst)) {
      if (weighted_welfare(inst, a, alpha) != primal.value) continue;
      ++optima;
      const auto pot = compute_potentials(inst, a, alpha);
      out.require(pot.objective(k) == primal.value, tag + "potential objective");
      out.require(verify_complementary_slackness(inst, indicator_matrix(a, n * k), pot, alpha).holds(),
                  tag + "slackness (potentials)");
      if (!first) first = pot;
      out.require(pot == *first, tag + "potentials differ across optimal allocations");
    }
    out.require(optima > 0, tag + "no enumerated optimum");
    with_ties += optima > 1;
  }
  out.require(with_ties > 0, "no instance with several optimal allocations");
  if (out.pass) out.detail = std::to_string(with_ties) + " pairs with tied optima";
  return out;
}

Outcome negative_cycle_suite() {
  Outcome out;
  std::mt19937_64 rng(99);
  long checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; n * k <= 6; ++k) {
      for (int rep = 0; rep < 10; ++rep) {
        const auto inst = generate_instance(GenClass::General, {0, n, n * k, rep % 2 ? 3 : 9, true}, rng);
        const auto allocations = enumerate_balanced(inst);
        for (int draw = 0; draw < 20; ++draw) {
          const Vector alpha = random_alpha(rng, n);
          Rational best = weighted_welfare(inst, allocations.front(), alpha);
          for (const auto& a : allocations) best = max(best, weighted_welfare(inst, a, alpha));
          for (const auto& a : allocations) {
            const bool acyclic = !detect_negative_cycle(build_exchange_graph(inst, a, alpha)).has_value();
            out.require(acyclic == (weighted_welfare(inst, a, alpha) == best), "mismatch");
            ++checked;
          }
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " (allocation, alpha) pairs";
  return out;
}

Outcome reduction_suite() {
  Outcome out;
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 2, 3);
    const int m = uniform_int(rng, 1, 5);
    const auto inst = generate_instance(GenClass::TwoTypes, {0, n, m, 9, false}, rng);
    const auto reduced = reduce_unconstrained(inst);
    const auto r = solve_two_types(reduced.instance);
    const auto stripped = strip_dummies(r.allocation, reduced.original_goods);
    const std::string tag = "instance " + std::to_string(trial) + ": ";
    out.require(stripped.partitions(m), tag + "not a partition");
    out.require(static_cast<bool>(is_ef1(inst, stripped)), tag + "EF1");
    out.require(check_fpo(inst, stripped, FpoMode::Unconstrained).is_fpo(), tag + "unconstrained fPO");
  }
  return out;
}

Outcome rr_price_suite() {
  Outcome out;
  std::mt19937_64 rng(555);
  for (int draw = 0; draw < 1000; ++draw) {
    const int agents = uniform_int(rng, 1, 6);
    const int k = uniform_int(rng, 1, 5);
    const int extra = uniform_int(rng, 0, 4);
    Vector prices(agents * k + extra);
    for (Eigen::Index j = 0; j < prices.size(); ++j) prices(j) = Rational(uniform_int(rng, 0, 12), uniform_int(rng, 1, 3));
    std::vector<int> goods(prices.size());
    std::iota(goods.begin(), goods.end(), 0);
    std::shuffle(goods.begin(), goods.end(), rng);
    goods.resize(agents * k);
    const auto x = round_robin_by_price(goods, prices, agents, k);

    std::vector<Rational> chain;
    for (const auto& b : x) chain.push_back(price_of(prices, b));
    for (const auto& b : x) chain.push_back(price_hat(prices, b));
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
      out.require(chain[t] >= chain[t + 1], "draw " + std::to_string(draw) + ": chain broken");
    }
  }
  return out;
}

bool report(int id, const std::string& name, const std::function<Outcome()>& body, double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) out.require(false, "over the time limit");
  std::printf("%s  %d. %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  return out.pass;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "running-example exactness", running_example_exactness, 1.0);
  ok &= report(2, "bivalued solver suite", bivalued_suite, 60.0);

  TwoTypeRuns runs;
  ok &= report(3, "two-types solver suite", [&] {
    runs = two_types_suite();
    Outcome o = runs.solver;
    if (o.pass) o.detail = std::to_string(runs.oracle_checked) + " outputs checked against the oracle";
    return o;
  }, 300.0);
  ok &= report(4, "duality suite", duality_suite);
  ok &= report(5, "negative-cycle characterization", negative_cycle_suite);
  ok &= report(6, "p-EF1 implies EF1", [&] {
    Outcome o = runs.lemma;
    o.require(runs.pef1_holds > 0, "p-EF1 never held");
    if (o.pass) o.detail = std::to_string(runs.pef1_holds) + " p-EF1 allocations, all EF1";
    return o;
  });
  ok &= report(7, "reduction round trip", reduction_suite);
  ok &= report(8, "round-robin price chain", rr_price_suite);
  return ok ? 0 : 1;
}
