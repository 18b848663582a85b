#include "balfair/core.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "balfair/errors.hpp"

namespace balfair {

Instance::Instance(Matrix values) : values_(std::move(values)) {
  if (values_.rows() < 1) throw InvalidArgument("instance needs at least one agent");
  if (values_.cols() < 1) throw InvalidArgument("instance needs at least one good");
  for (Eigen::Index i = 0; i < values_.rows(); ++i) {
    for (Eigen::Index j = 0; j < values_.cols(); ++j) {
      if (values_(i, j).sign() < 0) {
        throw InvalidArgument("negative valuation for agent " + std::to_string(i + 1) + ", good " +
                              std::to_string(j + 1));
      }
    }
  }
}

int Instance::k() const {
  if (!divisible()) {
    throw InvalidArgument("number of goods (" + std::to_string(num_goods()) +
                          ") is not a multiple of the number of agents (" + std::to_string(num_agents()) + ")");
  }
  return num_goods() / num_agents();
}

Allocation::Allocation(std::vector<Bundle> bundles) : bundles_(std::move(bundles)) {
  for (auto& b : bundles_) std::sort(b.begin(), b.end());
}

Allocation Allocation::from_owners(std::span<const int> owner, int num_agents) {
  std::vector<Bundle> bundles(num_agents);
  for (std::size_t j = 0; j < owner.size(); ++j) {
    if (owner[j] < 0 || owner[j] >= num_agents) throw InvalidArgument("owner index out of range");
    bundles[owner[j]].push_back(static_cast<int>(j));
  }
  return Allocation(std::move(bundles));
}

bool Allocation::partitions(int num_goods) const {
  std::vector<char> seen(num_goods, 0);
  int count = 0;
  for (const auto& b : bundles_) {
    for (int j : b) {
      if (j < 0 || j >= num_goods || seen[j]) return false;
      seen[j] = 1;
      ++count;
    }
  }
  return count == num_goods;
}

bool Allocation::is_balanced(int k) const {
  return std::all_of(bundles_.begin(), bundles_.end(),
                     [k](const Bundle& b) { return static_cast<int>(b.size()) == k; });
}

std::vector<int> Allocation::owners(int num_goods) const {
  std::vector<int> owner(num_goods, -1);
  for (int i = 0; i < num_agents(); ++i) {
    for (int j : bundles_[i]) owner.at(j) = i;
  }
  return owner;
}

void require_allocation(const Instance& inst, const Allocation& alloc, bool balanced) {
  if (alloc.num_agents() != inst.num_agents()) {
    throw InvalidArgument("allocation has " + std::to_string(alloc.num_agents()) + " bundles for " +
                          std::to_string(inst.num_agents()) + " agents");
  }
  if (!alloc.partitions(inst.num_goods())) throw InvalidArgument("allocation does not partition the goods");
  if (balanced && !alloc.is_balanced(inst.k())) throw InvalidArgument("allocation is not balanced");
}

Matrix indicator_matrix(const Allocation& alloc, int num_goods) {
  Matrix x = Matrix::Constant(alloc.num_agents(), num_goods, Rational(0));
  for (int i = 0; i < alloc.num_agents(); ++i) {
    for (int j : alloc.bundle(i)) x(i, j) = 1;
  }
  return x;
}

bool is_balanced_fractional(const FractionalAllocation& x, int k) {
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (x(i, j).sign() < 0 || x(i, j) > Rational(1)) return false;
    }
  }
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    if (x.col(j).sum() != Rational(1)) return false;
  }
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    if (x.row(i).sum() != Rational(k)) return false;
  }
  return true;
}

std::optional<std::vector<BivaluedParams>> bivalued_params(const Instance& inst) {
  std::vector<BivaluedParams> params;
  params.reserve(inst.num_agents());
  for (int i = 0; i < inst.num_agents(); ++i) {
    std::set<Rational> distinct;
    for (int j = 0; j < inst.num_goods(); ++j) {
      distinct.insert(inst.value(i, j));
      if (distinct.size() > 2) return std::nullopt;
    }
    if (distinct.size() == 1) {
      const Rational c = *distinct.begin();
      params.push_back({c + 1, c});
    } else {
      params.push_back({*distinct.rbegin(), *distinct.begin()});
    }
  }
  return params;
}

InstanceClass classify(const Instance& inst) {
  const int n = inst.num_agents();
  std::vector<int> type_of(n, -1);
  std::vector<int> representatives;
  for (int i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < representatives.size(); ++t) {
      if (inst.row(i) == inst.row(representatives[t])) {
        type_of[i] = static_cast<int>(t);
        break;
      }
    }
    if (type_of[i] < 0) {
      type_of[i] = static_cast<int>(representatives.size());
      representatives.push_back(i);
    }
  }

  if (representatives.size() == 1) return SingleType{};
  if (auto params = bivalued_params(inst)) return BivaluedClass{std::move(*params)};
  if (representatives.size() == 2) {
    TwoTypeClass c;
    c.u1 = inst.row(representatives[0]);
    c.u2 = inst.row(representatives[1]);
    for (int i = 0; i < n; ++i) (type_of[i] == 0 ? c.type1_agents : c.type2_agents).push_back(i);
    return c;
  }
  return GeneralClass{};
}

Rational bundle_value(const Instance& inst, int agent, std::span<const int> bundle) {
  if (agent < 0 || agent >= inst.num_agents()) throw InvalidArgument("agent index out of range");
  Rational total;
  for (int j : bundle) {
    if (j < 0 || j >= inst.num_goods()) throw InvalidArgument("good index out of range");
    total += inst.value(agent, j);
  }
  return total;
}

Vector valuation_vector(const Instance& inst, const Allocation& alloc) {
  Vector v(alloc.num_agents());
  for (int i = 0; i < alloc.num_agents(); ++i) v(i) = bundle_value(inst, i, alloc.bundle(i));
  return v;
}

Rational weighted_welfare(const Instance& inst, const Allocation& alloc, const Vector& alpha) {
  if (alpha.size() != alloc.num_agents()) throw InvalidArgument("weight vector has wrong length");
  Rational total;
  for (int i = 0; i < alloc.num_agents(); ++i) total += alpha(i) * bundle_value(inst, i, alloc.bundle(i));
  return total;
}

Rational nash_product(const Instance& inst, const Allocation& alloc) {
  Rational product(1);
  for (int i = 0; i < alloc.num_agents(); ++i) product *= bundle_value(inst, i, alloc.bundle(i));
  return product;
}

ReducedInstance reduce_unconstrained(const Instance& inst) {
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  const int dummies = m * (n - 1);
  Matrix values = Matrix::Constant(n, m + dummies, Rational(0));
  values.leftCols(m) = inst.values();
  ReducedInstance out{Instance(std::move(values)), m, {}};
  for (int j = m; j < m + dummies; ++j) out.dummies.push_back(j);
  return out;
}

Allocation strip_dummies(const Allocation& alloc, int original_goods) {
  std::vector<Bundle> bundles;
  bundles.reserve(alloc.num_agents());
  for (const auto& b : alloc.bundles()) {
    Bundle kept;
    std::copy_if(b.begin(), b.end(), std::back_inserter(kept), [&](int j) { return j < original_goods; });
    bundles.push_back(std::move(kept));
  }
  return Allocation(std::move(bundles));
}

Allocation round_robin(const Instance& inst) {
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  const int k = inst.k();
  std::vector<char> taken(m, 0);
  std::vector<Bundle> bundles(n);
  for (int round = 0; round < k; ++round) {
    for (int i = 0; i < n; ++i) {
      int best = -1;
      for (int j = 0; j < m; ++j) {
        if (!taken[j] && (best < 0 || inst.value(i, j) > inst.value(i, best))) best = j;
      }
      taken[best] = 1;
      bundles[i].push_back(best);
    }
  }
  return Allocation(std::move(bundles));
}

Vector constant_vector(int size, const Rational& value) { return Vector::Constant(size, value); }

}  // namespace balfair
