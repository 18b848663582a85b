#pragma once

#include <vector>

#include <Eigen/Core>

#include "balfair/errors.hpp"

namespace balfair {

template <typename Scalar>
struct MatchingResult {
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// right_of_left[l] is the right node matched to left node l.
  std::vector<int> right_of_left;
  Scalar value;
  /// Dual certificate: left_dual(l) + right_dual(r) >= w(l, r), with equality
  /// on matched pairs, and the duals sum to `value`.
  VectorType left_dual;
  VectorType right_dual;
};

/// Maximum-weight perfect matching of a square weight matrix (Hungarian
/// method, O(L^3)). Works for any exactly-ordered scalar. Among optimal
/// augmentations the lowest-index right node wins, so results are
/// reproducible; all-equal weights give the identity.
template <typename Derived>
MatchingResult<typename Derived::Scalar> max_weight_perfect_matching(const Eigen::MatrixBase<Derived>& weights) {
  using Scalar = typename Derived::Scalar;
  const int size = static_cast<int>(weights.rows());
  if (weights.rows() != weights.cols()) throw InvalidArgument("perfect matching needs a square weight matrix");
  if (size < 1) throw InvalidArgument("empty weight matrix");

  // Minimization on cost = -weight with 1-based rows/columns; column 0 is
  // the virtual start of each augmenting search.
  auto cost = [&](int row, int col) -> Scalar { return -Scalar(weights(row - 1, col - 1)); };
  std::vector<Scalar> u(size + 1, Scalar(0)), v(size + 1, Scalar(0)), minv(size + 1, Scalar(0));
  std::vector<int> match(size + 1, 0), way(size + 1, 0);
  std::vector<char> used(size + 1), has_minv(size + 1);

  for (int row = 1; row <= size; ++row) {
    match[0] = row;
    int col0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(has_minv.begin(), has_minv.end(), 0);
    do {
      used[col0] = 1;
      const int row0 = match[col0];
      Scalar delta(0);
      int col1 = -1;
      for (int col = 1; col <= size; ++col) {
        if (used[col]) continue;
        Scalar cur = cost(row0, col) - u[row0] - v[col];
        if (!has_minv[col] || cur < minv[col]) {
          minv[col] = cur;
          has_minv[col] = 1;
          way[col] = col0;
        }
        if (col1 < 0 || minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (int col = 0; col <= size; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else if (has_minv[col]) {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const int col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  MatchingResult<Scalar> result;
  result.right_of_left.assign(size, -1);
  result.value = Scalar(0);
  result.left_dual.resize(size);
  result.right_dual.resize(size);
  for (int col = 1; col <= size; ++col) result.right_of_left[match[col] - 1] = col - 1;
  for (int row = 0; row < size; ++row) {
    result.value += Scalar(weights(row, result.right_of_left[row]));
    result.left_dual(row) = -u[row + 1];
    result.right_dual(row) = -v[row + 1];
  }
  return result;
}

}  // namespace balfair
