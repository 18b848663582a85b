#include "balfair/exchange_graph.hpp"

#include <algorithm>

#include "balfair/errors.hpp"

namespace balfair {

ExchangeGraph::ExchangeGraph(int num_agents, int num_goods, std::vector<Arc> arcs)
    : num_agents_(num_agents), num_goods_(num_goods), arcs_(std::move(arcs)) {}

std::optional<Rational> ExchangeGraph::weight(int from, int to) const {
  for (const auto& a : arcs_) {
    if (a.from == from && a.to == to) return a.weight;
  }
  return std::nullopt;
}

std::string ExchangeGraph::label(int node) const {
  if (is_agent(node)) return "agent " + std::to_string(node + 1);
  if (is_good(node)) return "good " + std::to_string(node - num_agents_ + 1);
  return "root";
}

ExchangeGraph build_exchange_graph(const Instance& inst, const Allocation& alloc, const Vector& alpha) {
  require_allocation(inst, alloc, true);
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  if (alpha.size() != n) throw InvalidArgument("weight vector has wrong length");
  for (int i = 0; i < n; ++i) {
    if (alpha(i).sign() <= 0) throw InvalidArgument("weights must be positive");
  }

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * m + 2 * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) arcs.push_back({i, n + j, -(alpha(i) * inst.value(i, j))});
  }
  const auto owner = alloc.owners(m);
  for (int j = 0; j < m; ++j) arcs.push_back({n + j, owner[j], alpha(owner[j]) * inst.value(owner[j], j)});
  for (int j = 0; j < m; ++j) arcs.push_back({n + m, n + j, Rational(0)});
  return ExchangeGraph(n, m, std::move(arcs));
}

std::optional<std::vector<int>> detect_negative_cycle(const ExchangeGraph& graph) {
  const int v = graph.num_nodes();
  // All-zero start acts as a virtual source joined to every node.
  std::vector<Rational> dist(v);
  std::vector<int> pred(v, -1);
  int last = -1;
  for (int round = 0; round < v; ++round) {
    last = -1;
    for (const auto& a : graph.arcs()) {
      Rational cand = dist[a.from] + a.weight;
      if (cand < dist[a.to]) {
        dist[a.to] = std::move(cand);
        pred[a.to] = a.from;
        last = a.to;
      }
    }
    if (last < 0) return std::nullopt;
  }

  int x = last;
  for (int step = 0; step < v; ++step) x = pred[x];
  std::vector<int> cycle{x};
  for (int y = pred[x]; y != x; y = pred[y]) cycle.push_back(y);
  std::reverse(cycle.begin(), cycle.end());
  if (cycle_weight(graph, cycle).sign() >= 0) throw InvariantViolation("extracted cycle is not negative");
  return cycle;
}

Rational cycle_weight(const ExchangeGraph& graph, std::span<const int> cycle) {
  Rational total;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const int from = cycle[t];
    const int to = cycle[(t + 1) % cycle.size()];
    auto w = graph.weight(from, to);
    if (!w) throw InvalidArgument("cycle uses a missing arc");
    total += *w;
  }
  return total;
}

Rational Potentials::objective(int k) const { return Rational(k) * q.sum() + p.sum(); }

std::vector<std::optional<Rational>> shortest_distances(const ExchangeGraph& graph) {
  const int v = graph.num_nodes();
  std::vector<std::optional<Rational>> dist(v);
  dist[graph.root()] = Rational(0);
  auto relax_all = [&] {
    bool changed = false;
    for (const auto& a : graph.arcs()) {
      if (!dist[a.from]) continue;
      Rational cand = *dist[a.from] + a.weight;
      if (!dist[a.to] || cand < *dist[a.to]) {
        dist[a.to] = std::move(cand);
        changed = true;
      }
    }
    return changed;
  };
  for (int round = 0; round + 1 < v; ++round) {
    if (!relax_all()) return dist;
  }
  if (relax_all()) throw NegativeCycleError("exchange graph has a negative cycle; allocation is not optimal");
  return dist;
}

Potentials compute_potentials(const Instance& inst, const Allocation& alloc, const Vector& alpha) {
  const auto graph = build_exchange_graph(inst, alloc, alpha);
  const auto dist = shortest_distances(graph);
  Potentials pot{Vector(inst.num_agents()), Vector(inst.num_goods())};
  for (int i = 0; i < inst.num_agents(); ++i) pot.q(i) = dist[graph.agent_node(i)].value();
  for (int j = 0; j < inst.num_goods(); ++j) pot.p(j) = -dist[graph.good_node(j)].value();
  return pot;
}

}  // namespace balfair
