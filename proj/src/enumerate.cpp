#include "balfair/enumerate.hpp"

#include <limits>
#include <string>

#include "balfair/errors.hpp"

namespace balfair {

__extension__ using u128 = unsigned __int128;

std::uint64_t balanced_allocation_count(int num_agents, int k) {
  // Product over agents of C(remaining, k), saturating.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  u128 total = 1;
  int remaining = num_agents * k;
  for (int i = 0; i < num_agents; ++i) {
    u128 binom = 1;
    for (int t = 1; t <= k; ++t) {
      binom = binom * static_cast<unsigned>(remaining - k + t) / static_cast<unsigned>(t);
      if (binom > kMax) return kMax;
    }
    total *= binom;
    if (total > kMax) return kMax;
    remaining -= k;
  }
  return static_cast<std::uint64_t>(total);
}

void for_each_balanced(int num_agents, int k, const std::function<bool(const Allocation&)>& visit,
                       std::uint64_t max_states) {
  const auto count = balanced_allocation_count(num_agents, k);
  if (count > max_states) {
    throw TooLarge(std::to_string(count) + " balanced allocations exceed the enumeration limit of " +
                   std::to_string(max_states));
  }
  const int m = num_agents * k;
  std::vector<int> owner(m, 0);
  std::vector<int> capacity(num_agents, k);
  bool stop = false;

  std::function<void(int)> assign = [&](int good) {
    if (stop) return;
    if (good == m) {
      if (!visit(Allocation::from_owners(owner, num_agents))) stop = true;
      return;
    }
    for (int i = 0; i < num_agents && !stop; ++i) {
      if (capacity[i] == 0) continue;
      owner[good] = i;
      --capacity[i];
      assign(good + 1);
      ++capacity[i];
    }
  };
  assign(0);
}

std::vector<Allocation> enumerate_balanced(const Instance& inst, std::uint64_t max_states) {
  std::vector<Allocation> out;
  for_each_balanced(
      inst.num_agents(), inst.k(),
      [&](const Allocation& a) {
        out.push_back(a);
        return true;
      },
      max_states);
  return out;
}

}  // namespace balfair
