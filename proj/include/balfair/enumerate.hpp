#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "balfair/core.hpp"

namespace balfair {

inline constexpr std::uint64_t kDefaultMaxStates = 1'000'000;

/// m! / (k!)^n, saturated at UINT64_MAX.
std::uint64_t balanced_allocation_count(int num_agents, int k);

/// Calls `visit` on every balanced allocation of m = n*k goods exactly once,
/// ordered lexicographically by the owner string (owner of good 0, good 1,
/// ...). Stops early when `visit` returns false. Throws TooLarge when the
/// count exceeds max_states.
void for_each_balanced(int num_agents, int k, const std::function<bool(const Allocation&)>& visit,
                       std::uint64_t max_states = kDefaultMaxStates);

std::vector<Allocation> enumerate_balanced(const Instance& inst, std::uint64_t max_states = kDefaultMaxStates);

}  // namespace balfair
