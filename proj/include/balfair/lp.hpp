#pragma once

#include <optional>

#include "balfair/core.hpp"
#include "balfair/exchange_graph.hpp"
#include "balfair/simplex.hpp"

namespace balfair {

struct PrimalSolution {
  FractionalAllocation x;
  Rational value;
};

/// max sum_ij alpha_i v_ij x_ij over balanced fractional allocations. The
/// returned vertex is integral (the constraint matrix is totally unimodular);
/// a fractional vertex raises InvariantViolation.
PrimalSolution solve_primal(const Instance& inst, const Vector& alpha);

/// min k sum q + sum p  s.t.  q_i + p_j >= alpha_i v_ij, solved directly as
/// its own LP (an optimal solution with q, p >= 0 always exists).
Potentials solve_dual(const Instance& inst, const Vector& alpha);

enum class FpoMode { Balanced, Unconstrained };

struct FpoCheck {
  /// Pareto-dominating fractional allocation, absent iff the allocation is fPO.
  std::optional<FractionalAllocation> dominated_by;
  /// Optimal total gain sum_i z_i (zero iff fPO).
  Rational gain;

  bool is_fpo() const { return !dominated_by.has_value(); }
};

/// Exact fPO test: maximize sum_i z_i subject to
///   sum_j v_ij x_ij = v_i(A_i) + z_i,  column sums 1,  row sums k (Balanced
///   mode only),  x, z >= 0.
/// The allocation is fPO iff the optimum is exactly 0.
FpoCheck check_fpo(const Instance& inst, const Allocation& alloc, FpoMode mode = FpoMode::Balanced);

enum class SlacknessStatus { Holds, PrimalInfeasible, DualInfeasible, Violated };

struct SlacknessCheck {
  SlacknessStatus status = SlacknessStatus::Holds;
  int agent = -1;  // offending pair, when applicable
  int good = -1;

  bool holds() const { return status == SlacknessStatus::Holds; }
};

/// Checks primal feasibility of x, dual feasibility of pot, and that
/// x_ij = 0 or q_i + p_j = alpha_i v_ij for every pair. Holds implies both
/// solutions are optimal.
SlacknessCheck verify_complementary_slackness(const Instance& inst, const FractionalAllocation& x,
                                              const Potentials& pot, const Vector& alpha);

}  // namespace balfair
