#include "balfair/verify.hpp"

#include <sstream>

#include "balfair/errors.hpp"
#include "balfair/exchange_graph.hpp"

namespace balfair {

namespace {

std::string bundle_str(const Bundle& b) {
  std::string s = "{";
  for (std::size_t t = 0; t < b.size(); ++t) s += (t ? "," : "") + std::to_string(b[t] + 1);
  return s + "}";
}

std::string vector_str(const Vector& v) {
  std::string s = "(";
  for (Eigen::Index t = 0; t < v.size(); ++t) s += (t ? "," : "") + v(t).str();
  return s + ")";
}

struct Describe {
  std::string operator()(const EnvyWitness& w) const {
    std::ostringstream os;
    os << "agent " << w.envious + 1 << " envies agent " << w.envied + 1 << " beyond one good: "
       << w.own_value << " < " << w.other_value_minus_best << " (after removing good " << w.removed_good + 1
       << ")";
    return os.str();
  }
  std::string operator()(const PriceEnvyWitness& w) const {
    std::ostringstream os;
    os << "price envy from agent " << w.agent + 1 << " to agent " << w.other + 1 << ": p = " << w.price
       << " < p_hat = " << w.other_price_hat;
    return os.str();
  }
  std::string operator()(const DominationWitness& w) const {
    std::string s = "Pareto-dominated by (";
    for (int i = 0; i < w.dominator.num_agents(); ++i) s += (i ? "," : "") + bundle_str(w.dominator.bundle(i));
    return s + ") with values " + vector_str(w.dominator_values) + " vs " + vector_str(w.values);
  }
  std::string operator()(const CycleWitness& w) const {
    std::string s = "negative cycle of weight " + w.weight.str() + ":";
    for (int node : w.nodes) {
      s += node < w.num_agents ? " a" + std::to_string(node + 1) : " g" + std::to_string(node - w.num_agents + 1);
    }
    return s;
  }
};

}  // namespace

std::string describe(const Witness& witness) { return std::visit(Describe{}, witness); }

Verdict is_ef1(const Instance& inst, const Allocation& alloc) {
  require_allocation(inst, alloc, false);
  const int n = inst.num_agents();
  for (int i = 0; i < n; ++i) {
    const Rational own = bundle_value(inst, i, alloc.bundle(i));
    for (int other = 0; other < n; ++other) {
      const auto& b = alloc.bundle(other);
      if (other == i || b.empty()) continue;
      int best = b.front();
      for (int j : b) {
        if (inst.value(i, j) > inst.value(i, best)) best = j;
      }
      Rational remainder = bundle_value(inst, i, b) - inst.value(i, best);
      if (own < remainder) return {false, EnvyWitness{i, other, best, own, std::move(remainder)}};
    }
  }
  return {};
}

Rational price_of(const Vector& prices, const Bundle& bundle) {
  Rational total;
  for (int j : bundle) total += prices(j);
  return total;
}

Rational price_hat(const Vector& prices, const Bundle& bundle) {
  if (bundle.empty()) throw InvalidArgument("p_hat is undefined for an empty bundle");
  Rational top = prices(bundle.front());
  for (int j : bundle) top = max(top, prices(j));
  return price_of(prices, bundle) - top;
}

Verdict is_p_ef1(const Vector& prices, const Allocation& alloc) {
  const int n = alloc.num_agents();
  for (int i = 0; i < n; ++i) {
    if (alloc.bundle(i).empty()) throw InvalidArgument("p-EF1 requires non-empty bundles");
    for (int j : alloc.bundle(i)) {
      if (j < 0 || j >= prices.size()) throw InvalidArgument("good index out of range of the price vector");
    }
  }
  for (int i = 0; i < n; ++i) {
    const Rational own = price_of(prices, alloc.bundle(i));
    for (int other = 0; other < n; ++other) {
      if (other == i) continue;
      Rational hat = price_hat(prices, alloc.bundle(other));
      if (own < hat) return {false, PriceEnvyWitness{i, other, own, std::move(hat)}};
    }
  }
  return {};
}

bool pareto_dominates(const Vector& x, const Vector& y) {
  bool strict = false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) < y(i)) return false;
    if (x(i) > y(i)) strict = true;
  }
  return strict;
}

Verdict is_po_bruteforce(const Instance& inst, const Allocation& alloc, std::uint64_t max_states) {
  require_allocation(inst, alloc, true);
  const Vector values = valuation_vector(inst, alloc);
  Verdict verdict;
  for_each_balanced(
      inst.num_agents(), inst.k(),
      [&](const Allocation& other) {
        Vector other_values = valuation_vector(inst, other);
        if (pareto_dominates(other_values, values)) {
          verdict = {false, DominationWitness{other, values, std::move(other_values)}};
          return false;
        }
        return true;
      },
      max_states);
  return verdict;
}

Verdict certify_fpo(const Instance& inst, const Allocation& alloc, const Vector& alpha) {
  const auto graph = build_exchange_graph(inst, alloc, alpha);
  auto cycle = detect_negative_cycle(graph);
  if (!cycle) return {};
  Rational w = cycle_weight(graph, *cycle);
  return {false, CycleWitness{inst.num_agents(), std::move(*cycle), std::move(w)}};
}

}  // namespace balfair
