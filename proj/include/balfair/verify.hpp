#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "balfair/core.hpp"
#include "balfair/enumerate.hpp"

namespace balfair {

/// Agent `envious` still envies `envied` after removing `removed_good`, the
/// good of A_envied it values most: own_value < other_value_minus_best.
struct EnvyWitness {
  int envious;
  int envied;
  int removed_good;
  Rational own_value;
  Rational other_value_minus_best;
};

/// p(A_agent) < p_hat(A_other).
struct PriceEnvyWitness {
  int agent;
  int other;
  Rational price;
  Rational other_price_hat;
};

struct DominationWitness {
  Allocation dominator;
  Vector values;
  Vector dominator_values;
};

/// Negative cycle in the exchange graph (node ids as in ExchangeGraph).
struct CycleWitness {
  int num_agents;
  std::vector<int> nodes;
  Rational weight;
};

using Witness = std::variant<EnvyWitness, PriceEnvyWitness, DominationWitness, CycleWitness>;

/// Outcome of a check. A witness is present iff the property fails.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

/// One-line, 1-based human-readable description with exact values.
std::string describe(const Witness& witness);

/// EF1: for all i != i', A_i' empty or v_i(A_i) >= v_i(A_i') - max_{j in A_i'} v_ij.
/// Works for unbalanced allocations too.
Verdict is_ef1(const Instance& inst, const Allocation& alloc);

/// p(A_i) >= p(A_i') - max_{j in A_i'} p_j for all pairs. Empty bundles are rejected.
Verdict is_p_ef1(const Vector& prices, const Allocation& alloc);

/// p(X) and p(X) minus its largest price (X non-empty).
Rational price_of(const Vector& prices, const Bundle& bundle);
Rational price_hat(const Vector& prices, const Bundle& bundle);

/// x Pareto-dominates y: x >= y coordinatewise with at least one strict.
bool pareto_dominates(const Vector& x, const Vector& y);

/// PO among balanced allocations by exhaustive enumeration. Throws TooLarge
/// beyond max_states; no efficient general check exists.
Verdict is_po_bruteforce(const Instance& inst, const Allocation& alloc,
                         std::uint64_t max_states = kDefaultMaxStates);

/// Positive fPO certificate: holds iff the exchange graph for (alloc, alpha)
/// has no negative cycle, i.e. alloc maximizes sum_i alpha_i v_i(A_i).
Verdict certify_fpo(const Instance& inst, const Allocation& alloc, const Vector& alpha);

}  // namespace balfair
