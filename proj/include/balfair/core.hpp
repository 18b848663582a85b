#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "balfair/rational.hpp"

namespace balfair {

// Agents and goods are 0-based throughout the library. File formats and the
// command line use 1-based indices; conversion happens in io.

using Bundle = std::vector<int>;

/// Additive valuations of n agents over m goods; entries are nonnegative.
class Instance {
 public:
  explicit Instance(Matrix values);

  int num_agents() const { return static_cast<int>(values_.rows()); }
  int num_goods() const { return static_cast<int>(values_.cols()); }

  /// True when m is a multiple of n, i.e. balanced allocations exist.
  bool divisible() const { return num_goods() % num_agents() == 0; }

  /// Bundle size m / n of a balanced allocation. Throws unless divisible().
  int k() const;

  const Matrix& values() const { return values_; }
  const Rational& value(int agent, int good) const { return values_(agent, good); }
  auto row(int agent) const { return values_.row(agent); }

  friend bool operator==(const Instance& a, const Instance& b) { return a.values_ == b.values_; }

 private:
  Matrix values_;
};

/// Ordered partition of the goods into one bundle per agent. Bundles are
/// stored sorted ascending.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<Bundle> bundles);

  /// Builds from the owner of each good.
  static Allocation from_owners(std::span<const int> owner, int num_agents);

  int num_agents() const { return static_cast<int>(bundles_.size()); }
  const Bundle& bundle(int agent) const { return bundles_.at(agent); }
  const std::vector<Bundle>& bundles() const { return bundles_; }

  /// True iff the bundles are disjoint and cover exactly {0..num_goods-1}.
  bool partitions(int num_goods) const;
  bool is_balanced(int k) const;

  /// owner[j] = agent holding good j. Requires partitions(num_goods).
  std::vector<int> owners(int num_goods) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Bundle> bundles_;
};

/// Throws InvalidArgument unless alloc partitions the goods of inst into
/// inst.num_agents() bundles; with `balanced`, also requires |A_i| = k.
void require_allocation(const Instance& inst, const Allocation& alloc, bool balanced);

/// n x m matrix with x_ij in [0,1], column sums 1 and (balanced) row sums k.
using FractionalAllocation = Matrix;

Matrix indicator_matrix(const Allocation& alloc, int num_goods);
bool is_balanced_fractional(const FractionalAllocation& x, int k);

struct BivaluedParams {
  Rational high;  // a_i
  Rational low;   // b_i

  friend bool operator==(const BivaluedParams&, const BivaluedParams&) = default;
};

struct SingleType {};
struct BivaluedClass {
  std::vector<BivaluedParams> params;
};
struct TwoTypeClass {
  RowVector u1, u2;
  std::vector<int> type1_agents, type2_agents;
};
struct GeneralClass {};

using InstanceClass = std::variant<SingleType, BivaluedClass, TwoTypeClass, GeneralClass>;

/// Most specific class, preferring SingleType, then Bivalued, then TwoType.
InstanceClass classify(const Instance& inst);

/// (a_i, b_i) for every agent if each row has at most two distinct values.
/// A constant row c yields (c + 1, c).
std::optional<std::vector<BivaluedParams>> bivalued_params(const Instance& inst);

Rational bundle_value(const Instance& inst, int agent, std::span<const int> bundle);

/// (v_1(A_1), ..., v_n(A_n)).
Vector valuation_vector(const Instance& inst, const Allocation& alloc);

/// Sum_i alpha_i v_i(A_i).
Rational weighted_welfare(const Instance& inst, const Allocation& alloc, const Vector& alpha);

/// Product of the agents' bundle values.
Rational nash_product(const Instance& inst, const Allocation& alloc);

/// Balanced instance obtained by appending zero-valued dummy goods.
struct ReducedInstance {
  Instance instance;
  int original_goods;
  std::vector<int> dummies;
};

/// Appends m * (n - 1) dummy goods so that every allocation of the original
/// goods extends to a balanced allocation of the new instance with k = m.
ReducedInstance reduce_unconstrained(const Instance& inst);

/// Drops dummy goods (index >= original_goods) from every bundle.
Allocation strip_dummies(const Allocation& alloc, int original_goods);

/// Classic round-robin: agents 0..n-1 repeatedly pick their most valued
/// remaining good (lowest index on ties) until each holds k goods.
Allocation round_robin(const Instance& inst);

/// Vector with every entry equal to `value`.
Vector constant_vector(int size, const Rational& value);

}  // namespace balfair
