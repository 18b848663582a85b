#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <vector>

#include "balfair/core.hpp"

namespace fixtures {

using balfair::Allocation;
using balfair::Instance;
using balfair::Matrix;
using balfair::Rational;
using balfair::Vector;

inline Instance from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = static_cast<Eigen::Index>(rows.begin()->size());
  Matrix v(n, m);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) v(i, j++) = x;
    ++i;
  }
  return Instance(std::move(v));
}

/// v1 = (10, 10, 21, 22), v2 = (0, 1, 6, 8).
inline Instance running_example() { return from_rows({{10, 10, 21, 22}, {0, 1, 6, 8}}); }

/// Allocation from 1-based bundles.
inline Allocation alloc(std::initializer_list<std::initializer_list<int>> bundles) {
  std::vector<balfair::Bundle> out;
  for (const auto& b : bundles) {
    balfair::Bundle bundle;
    for (int g : b) bundle.push_back(g - 1);
    out.push_back(std::move(bundle));
  }
  return Allocation(std::move(out));
}

inline Vector vec(std::initializer_list<Rational> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

/// Random weights with small numerators and denominators, all positive.
inline Vector random_alpha(std::mt19937_64& rng, int n) {
  Vector a(n);
  for (int i = 0; i < n; ++i) a(i) = Rational(static_cast<long>(rng() % 5 + 1), static_cast<long>(rng() % 3 + 1));
  return a;
}

/// Independent enumeration: distinct permutations of the owner multiset
/// 0^k 1^k ... (n-1)^k, in lexicographic order.
inline std::vector<Allocation> owner_permutations(int n, int k) {
  std::vector<int> owner;
  for (int i = 0; i < n; ++i) owner.insert(owner.end(), k, i);
  std::vector<Allocation> out;
  do {
    out.push_back(Allocation::from_owners(owner, n));
  } while (std::next_permutation(owner.begin(), owner.end()));
  return out;
}

inline Rational max_welfare(const Instance& inst, const Vector& alpha) {
  Rational best(-1);
  for (const auto& a : owner_permutations(inst.num_agents(), inst.k())) {
    best = balfair::max(best, balfair::weighted_welfare(inst, a, alpha));
  }
  return best;
}

inline Instance random_instance(std::mt19937_64& rng, int n, int m, int max_value) {
  Matrix v(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) v(i, j) = static_cast<long>(rng() % static_cast<unsigned>(max_value + 1));
  }
  return Instance(std::move(v));
}

}  // namespace fixtures
