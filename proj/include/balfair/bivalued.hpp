#pragma once

#include <vector>

#include "balfair/core.hpp"

namespace balfair {

/// Perturbation 1 / (n k (k + 1)); n * k(k+1)/2 * epsilon is exactly 1/2.
Rational slot_epsilon(int num_agents, int k);

/// Weight of assigning good value v to slot s (1-based, s in [1, k]) of an
/// agent with values (a, b):  a/(a-b) + s*epsilon if v = a,  b/(a-b) if v = b.
/// Throws InvalidArgument when v is neither a nor b.
Rational slot_weight(const BivaluedParams& params, int slot, const Rational& value, const Rational& epsilon);

/// alpha_i = 1 / (a_i - b_i).
Vector bivalued_alpha(const std::vector<BivaluedParams>& params);

struct BivaluedResult {
  Allocation allocation;
  Vector alpha;
  /// Value of the perturbed max-weight slot matching.
  Rational matching_value;
};

/// Balanced EF1 + fPO allocation for personalized bivalued valuations via a
/// maximum-weight perfect matching between the n*k agent slots and the goods.
/// Slot s of agent i is matching row i*k + (s - 1). Throws NotBivalued.
BivaluedResult solve_bivalued(const Instance& inst);

/// fPO test for bivalued instances: alloc is fPO iff it maximizes
/// sum_i v_i(A_i) / (a_i - b_i) over balanced allocations. Throws NotBivalued.
bool check_bivalued_fpo(const Instance& inst, const Allocation& alloc);

/// Number of goods in `bundle` that `agent` values at its high value a_agent.
int high_count(const Instance& inst, const std::vector<BivaluedParams>& params, int agent, const Bundle& bundle);

}  // namespace balfair
