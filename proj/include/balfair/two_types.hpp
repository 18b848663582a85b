#pragma once

#include <span>
#include <vector>

#include "balfair/core.hpp"
#include "balfair/exchange_graph.hpp"

namespace balfair {

/// Instance whose agents share at most two valuation rows. Type 1 is the type
/// of agent 0; agents keep their original indices.
struct TwoTypeInstance {
  Instance instance;
  RowVector u1;
  RowVector u2;  // empty for a single type
  std::vector<int> type1_agents;
  std::vector<int> type2_agents;

  int n1() const { return static_cast<int>(type1_agents.size()); }
  int n2() const { return static_cast<int>(type2_agents.size()); }
  int k() const { return instance.k(); }

  /// alpha_i = 1 on type 1, gamma on type 2.
  Vector alpha(const Rational& gamma) const;
};

/// Throws MoreThanTwoTypes.
TwoTypeInstance make_two_type(const Instance& inst);

/// Smallest positive same-type value difference over (1 + largest value).
/// Throws InvalidArgument when both rows are constant.
Rational compute_delta(const RowVector& u1, const RowVector& u2);

/// gamma_0 = delta < gamma_1 < ... < gamma_L < gamma_{L+1} = 1/delta, where
/// the inner points are the critical values (u1j - u1j') / (u2j - u2j') over
/// pairs with u1j > u1j' and u2j > u2j'. Interval l (1-based, l in [1, L+1])
/// is [gamma_{l-1}, gamma_l].
struct GammaGrid {
  Rational delta;
  std::vector<Rational> criticals;

  int num_criticals() const { return static_cast<int>(criticals.size()); }
  int num_intervals() const { return num_criticals() + 1; }
  /// gamma_l for l in [0, L+1].
  Rational point(int l) const;
};

GammaGrid critical_values(const RowVector& u1, const RowVector& u2);

/// Goods given to type 1 (S) and type 2 (T).
struct Split {
  std::vector<int> type1_goods;
  std::vector<int> type2_goods;

  friend bool operator==(const Split&, const Split&) = default;
};

/// Maximizes sum over type-1 bundles of u1 plus gamma times type-2 bundles of
/// u2: S holds the k*n1 goods with the largest u1j - gamma*u2j, ties toward
/// the smaller good index.
Split optimal_split(const RowVector& u1, const RowVector& u2, const Rational& gamma, int n1, int k);

/// Sorts goods by (price descending, index ascending) and deals them
/// cyclically to `agents` bundles of size k.
std::vector<Bundle> round_robin_by_price(std::span<const int> goods, const Vector& prices, int agents, int k);

/// Round-robin redistribution of a split at a fixed gamma together with the
/// optimal potentials at that gamma.
struct TypedAllocation {
  std::vector<Bundle> x;  // type-1 bundles X_1..X_n1
  std::vector<Bundle> y;  // type-2 bundles Y_1..Y_n2
  Rational gamma;
  Potentials potentials;

  Allocation to_allocation(const TwoTypeInstance& tt) const;
};

/// Computes the potentials at gamma (Bellman-Ford on the exchange graph of
/// the split) and deals S among type 1 and T among type 2 by price. The split
/// must be optimal at gamma.
TypedAllocation make_typed_allocation(const TwoTypeInstance& tt, const Split& split, const Rational& gamma);

/// Deals a split using given potentials.
TypedAllocation deal_split(const TwoTypeInstance& tt, const Split& split, const Rational& gamma,
                           const Potentials& potentials);

struct ConditionsAB {
  bool a;  // p(X_n1) >= p_hat(Y_1)
  bool b;  // p(Y_n2) >= p_hat(X_1)
};

/// p(X_n1) - p_hat(Y_1) and p(Y_n2) - p_hat(X_1).
Rational condition_a_margin(const TypedAllocation& t);
Rational condition_b_margin(const TypedAllocation& t);

/// Evaluates (a) and (b) exactly. At least one always holds; (false, false)
/// raises InvariantViolation.
ConditionsAB conditions_ab(const TypedAllocation& t);

enum class TwoTypesPath { SingleType, Trivial, Endpoint, Sweep, Exchange };

/// Every redistribution examined while solving, for auditing.
struct TwoTypesTrace {
  struct Entry {
    TwoTypesPath phase;
    int interval;
    Rational gamma;
    Allocation allocation;
    Vector prices;
    ConditionsAB conditions;
  };
  std::vector<Entry> entries;
};

/// Finds gamma* in interval `ell` where (a) and (b) both hold. Requires (a)
/// at gamma_{ell-1} and (b) at gamma_ell. Candidate points are the interval
/// ends, breakpoints of the piecewise-linear potentials, price crossings and
/// roots of the linear condition margins in between; they are scanned in
/// ascending order.
TypedAllocation gamma_sweep(const TwoTypeInstance& tt, const GammaGrid& grid, int ell,
                            TwoTypesTrace* trace = nullptr);

/// Swaps goods one pair at a time from S^(ell) toward S^(ell+1) at fixed
/// prices p^(gamma_ell), redealing after each swap, and returns the first EF1
/// redistribution. Requires (a) at (ell, gamma_ell) and (b) at
/// (ell+1, gamma_ell).
TypedAllocation split_exchange(const TwoTypeInstance& tt, const GammaGrid& grid, int ell,
                               TwoTypesTrace* trace = nullptr);

struct TwoTypesResult {
  Allocation allocation;
  Rational gamma;
  Vector alpha;
  Potentials potentials;
  TwoTypesPath path;
  int interval = 0;
};

/// Balanced EF1 + fPO allocation for at most two agent types. The
/// certificate (alpha, potentials) satisfies complementary slackness with the
/// returned allocation. Throws MoreThanTwoTypes.
TwoTypesResult solve_two_types(const Instance& inst, TwoTypesTrace* trace = nullptr);

}  // namespace balfair
