#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "balfair/core.hpp"

namespace balfair {

struct Arc {
  int from;
  int to;
  Rational weight;
};

/// Directed graph on agents, goods and a root r for a balanced allocation A
/// and positive weights alpha:
///   agent i -> good j   with weight -alpha_i v_ij   (every pair),
///   good j  -> agent i  with weight  alpha_i v_ij   (iff j in A_i),
///   r       -> good j   with weight  0.
/// A maximizes sum_i alpha_i v_i(A_i) over balanced allocations iff the graph
/// has no negative cycle.
///
/// Node ids: agents 0..n-1, goods n..n+m-1, root n+m. Arcs are stored in the
/// order above, agents and goods ascending.
class ExchangeGraph {
 public:
  ExchangeGraph(int num_agents, int num_goods, std::vector<Arc> arcs);

  int num_agents() const { return num_agents_; }
  int num_goods() const { return num_goods_; }
  int num_nodes() const { return num_agents_ + num_goods_ + 1; }

  int agent_node(int agent) const { return agent; }
  int good_node(int good) const { return num_agents_ + good; }
  int root() const { return num_agents_ + num_goods_; }
  bool is_agent(int node) const { return node < num_agents_; }
  bool is_good(int node) const { return node >= num_agents_ && node < root(); }

  std::span<const Arc> arcs() const { return arcs_; }
  std::optional<Rational> weight(int from, int to) const;

  /// "agent 2", "good 4" or "root" (1-based labels).
  std::string label(int node) const;

 private:
  int num_agents_;
  int num_goods_;
  std::vector<Arc> arcs_;
};

ExchangeGraph build_exchange_graph(const Instance& inst, const Allocation& alloc, const Vector& alpha);

/// A simple directed cycle of negative total weight, as the node sequence
/// v0 -> v1 -> ... -> v0 (v0 not repeated), or nullopt if none exists.
std::optional<std::vector<int>> detect_negative_cycle(const ExchangeGraph& graph);

Rational cycle_weight(const ExchangeGraph& graph, std::span<const int> cycle);

/// Dual solution (q per agent, p per good) of the balanced assignment LP.
struct Potentials {
  Vector q;
  Vector p;

  /// k * sum(q) + sum(p).
  Rational objective(int k) const;

  friend bool operator==(const Potentials&, const Potentials&) = default;
};

/// Single-source shortest distances from the root; nullopt for unreachable
/// nodes. Throws NegativeCycleError if a negative cycle is reachable.
std::vector<std::optional<Rational>> shortest_distances(const ExchangeGraph& graph);

/// q_i = dist(r, i), p_j = -dist(r, j) in the exchange graph. Requires A to be
/// weighted-welfare optimal; throws NegativeCycleError otherwise.
Potentials compute_potentials(const Instance& inst, const Allocation& alloc, const Vector& alpha);

}  // namespace balfair
