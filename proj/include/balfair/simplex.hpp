#pragma once

#include <vector>

#include "balfair/rational.hpp"

namespace balfair {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// maximize c^T x  subject to  a_r^T x (<=|=|>=) b_r  for every row r,  x >= 0.
class LinearProgram {
 public:
  explicit LinearProgram(int num_variables);

  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_constraints() const { return static_cast<int>(rhs_.size()); }

  void set_objective(int var, const Rational& coeff) { objective_(var) = coeff; }
  const Vector& objective() const { return objective_; }

  /// Adds an empty row and returns its index.
  int add_constraint(Relation rel, const Rational& rhs);
  void set_coefficient(int row, int var, const Rational& coeff);

  const std::vector<std::vector<std::pair<int, Rational>>>& rows() const { return rows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<Rational>& rhs() const { return rhs_; }

 private:
  Vector objective_;
  std::vector<std::vector<std::pair<int, Rational>>> rows_;
  std::vector<Relation> relations_;
  std::vector<Rational> rhs_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vector x;  // basic feasible solution (a vertex) when Optimal
  Rational value;
};

/// Two-phase dense-tableau simplex in exact arithmetic with Bland's
/// anti-cycling rule.
LpSolution solve(const LinearProgram& lp);

}  // namespace balfair
