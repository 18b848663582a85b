#include "balfair/lp.hpp"

#include "balfair/errors.hpp"

namespace balfair {

namespace {

void require_positive(const Instance& inst, const Vector& alpha) {
  if (alpha.size() != inst.num_agents()) throw InvalidArgument("weight vector has wrong length");
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    if (alpha(i).sign() <= 0) throw InvalidArgument("weights must be positive");
  }
}

Matrix unpack(const Vector& x, int n, int m) {
  Matrix out(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) out(i, j) = x(i * m + j);
  }
  return out;
}

// Column sums 1 and, optionally, row sums k on the first n*m variables.
void add_assignment_constraints(LinearProgram& lp, int n, int m, std::optional<int> k) {
  for (int j = 0; j < m; ++j) {
    const int row = lp.add_constraint(Relation::Equal, Rational(1));
    for (int i = 0; i < n; ++i) lp.set_coefficient(row, i * m + j, Rational(1));
  }
  if (!k) return;
  for (int i = 0; i < n; ++i) {
    const int row = lp.add_constraint(Relation::Equal, Rational(*k));
    for (int j = 0; j < m; ++j) lp.set_coefficient(row, i * m + j, Rational(1));
  }
}

}  // namespace

PrimalSolution solve_primal(const Instance& inst, const Vector& alpha) {
  require_positive(inst, alpha);
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  LinearProgram lp(n * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) lp.set_objective(i * m + j, alpha(i) * inst.value(i, j));
  }
  add_assignment_constraints(lp, n, m, inst.k());
  const auto sol = solve(lp);
  if (sol.status != LpStatus::Optimal) throw InvariantViolation("balanced assignment LP not solved to optimality");
  for (Eigen::Index v = 0; v < sol.x.size(); ++v) {
    if (!sol.x(v).is_integer()) throw InvariantViolation("fractional vertex in a totally unimodular LP");
  }
  return {unpack(sol.x, n, m), sol.value};
}

Potentials solve_dual(const Instance& inst, const Vector& alpha) {
  require_positive(inst, alpha);
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  const int k = inst.k();
  // Variables: q_0..q_{n-1}, p_0..p_{m-1}; maximize the negated objective.
  LinearProgram lp(n + m);
  for (int i = 0; i < n; ++i) lp.set_objective(i, Rational(-k));
  for (int j = 0; j < m; ++j) lp.set_objective(n + j, Rational(-1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const int row = lp.add_constraint(Relation::GreaterEqual, alpha(i) * inst.value(i, j));
      lp.set_coefficient(row, i, Rational(1));
      lp.set_coefficient(row, n + j, Rational(1));
    }
  }
  const auto sol = solve(lp);
  if (sol.status != LpStatus::Optimal) throw InvariantViolation("dual LP not solved to optimality");
  return {sol.x.head(n), sol.x.tail(m)};
}

FpoCheck check_fpo(const Instance& inst, const Allocation& alloc, FpoMode mode) {
  require_allocation(inst, alloc, mode == FpoMode::Balanced);
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  // Variables: x_ij at i*m + j, then z_i at n*m + i.
  LinearProgram lp(n * m + n);
  for (int i = 0; i < n; ++i) {
    lp.set_objective(n * m + i, Rational(1));
    const int row = lp.add_constraint(Relation::Equal, bundle_value(inst, i, alloc.bundle(i)));
    for (int j = 0; j < m; ++j) {
      if (!inst.value(i, j).is_zero()) lp.set_coefficient(row, i * m + j, inst.value(i, j));
    }
    lp.set_coefficient(row, n * m + i, Rational(-1));
  }
  add_assignment_constraints(lp, n, m,
                             mode == FpoMode::Balanced ? std::optional<int>(inst.k()) : std::nullopt);
  const auto sol = solve(lp);
  if (sol.status != LpStatus::Optimal) throw InvariantViolation("fPO LP not solved to optimality");

  FpoCheck out;
  out.gain = sol.value;
  if (sol.value.sign() > 0) out.dominated_by = unpack(sol.x.head(n * m), n, m);
  return out;
}

SlacknessCheck verify_complementary_slackness(const Instance& inst, const FractionalAllocation& x,
                                              const Potentials& pot, const Vector& alpha) {
  const int n = inst.num_agents();
  const int m = inst.num_goods();
  if (x.rows() != n || x.cols() != m || pot.q.size() != n || pot.p.size() != m || alpha.size() != n) {
    throw InvalidArgument("dimension mismatch in complementary slackness check");
  }
  if (!is_balanced_fractional(x, inst.k())) return {SlacknessStatus::PrimalInfeasible};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (pot.q(i) + pot.p(j) < alpha(i) * inst.value(i, j)) return {SlacknessStatus::DualInfeasible, i, j};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!x(i, j).is_zero() && pot.q(i) + pot.p(j) != alpha(i) * inst.value(i, j)) {
        return {SlacknessStatus::Violated, i, j};
      }
    }
  }
  return {};
}

}  // namespace balfair
