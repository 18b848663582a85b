#include "balfair/bivalued.hpp"

#include "balfair/errors.hpp"
#include "balfair/matching.hpp"

namespace balfair {

namespace {

std::vector<BivaluedParams> require_bivalued(const Instance& inst) {
  auto params = bivalued_params(inst);
  if (!params) throw NotBivalued("some agent has more than two distinct values");
  return std::move(*params);
}

// Unperturbed slot weights alpha_i v_ij; its max matching is the max of
// sum_i alpha_i v_i(A_i) over balanced allocations.
Rational max_weighted_welfare(const Instance& inst, const Vector& alpha) {
  const int n = inst.num_agents();
  const int k = inst.k();
  Matrix w(n * k, inst.num_goods());
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < k; ++s) {
      for (int j = 0; j < inst.num_goods(); ++j) w(i * k + s, j) = alpha(i) * inst.value(i, j);
    }
  }
  return max_weight_perfect_matching(w).value;
}

}  // namespace

Rational slot_epsilon(int num_agents, int k) { return Rational(1, static_cast<long>(num_agents) * k * (k + 1)); }

Rational slot_weight(const BivaluedParams& params, int slot, const Rational& value, const Rational& epsilon) {
  const Rational gap = params.high - params.low;
  if (value == params.high) return params.high / gap + Rational(slot) * epsilon;
  if (value == params.low) return params.low / gap;
  throw InvalidArgument("value " + value.str() + " is neither the high nor the low value");
}

Vector bivalued_alpha(const std::vector<BivaluedParams>& params) {
  Vector alpha(static_cast<Eigen::Index>(params.size()));
  for (std::size_t i = 0; i < params.size(); ++i) alpha(i) = Rational(1) / (params[i].high - params[i].low);
  return alpha;
}

BivaluedResult solve_bivalued(const Instance& inst) {
  const auto params = require_bivalued(inst);
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  const int k = inst.k();
  const Rational eps = slot_epsilon(n, k);
  if (Rational(n) * Rational(k * (k + 1), 2) * eps != Rational(1, 2)) {
    throw InvariantViolation("slot perturbation does not sum to 1/2");
  }

  Matrix w(n * k, m);
  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= k; ++s) {
      for (int j = 0; j < m; ++j) w(i * k + s - 1, j) = slot_weight(params[i], s, inst.value(i, j), eps);
    }
  }
  const auto matching = max_weight_perfect_matching(w);

  std::vector<int> owner(m, -1);
  for (int row = 0; row < n * k; ++row) owner[matching.right_of_left[row]] = row / k;
  BivaluedResult out{Allocation::from_owners(owner, n), bivalued_alpha(params), matching.value};

  // The perturbation adds at most n * k(k+1)/2 * epsilon = 1/2.
  const Rational excess = out.matching_value - weighted_welfare(inst, out.allocation, out.alpha);
  if (excess.sign() < 0 || excess > Rational(1, 2)) {
    throw InvariantViolation("perturbed matching value out of range: excess " + excess.str());
  }
  return out;
}

bool check_bivalued_fpo(const Instance& inst, const Allocation& alloc) {
  const auto params = require_bivalued(inst);
  require_allocation(inst, alloc, true);
  const Vector alpha = bivalued_alpha(params);
  return weighted_welfare(inst, alloc, alpha) == max_weighted_welfare(inst, alpha);
}

int high_count(const Instance& inst, const std::vector<BivaluedParams>& params, int agent, const Bundle& bundle) {
  int count = 0;
  for (int j : bundle) count += inst.value(agent, j) == params.at(agent).high ? 1 : 0;
  return count;
}

}  // namespace balfair
