#include "balfair/simplex.hpp"

#include <optional>

#include "balfair/errors.hpp"

namespace balfair {

LinearProgram::LinearProgram(int num_variables) : objective_(Vector::Constant(num_variables, Rational(0))) {}

int LinearProgram::add_constraint(Relation rel, const Rational& rhs) {
  rows_.emplace_back();
  relations_.push_back(rel);
  rhs_.push_back(rhs);
  return num_constraints() - 1;
}

void LinearProgram::set_coefficient(int row, int var, const Rational& coeff) {
  if (var < 0 || var >= num_variables()) throw InvalidArgument("LP variable index out of range");
  auto& r = rows_.at(row);
  for (auto& [v, c] : r) {
    if (v == var) {
      c = coeff;
      return;
    }
  }
  r.emplace_back(var, coeff);
}

namespace {

class Tableau {
 public:
  Tableau(Matrix table, std::vector<int> basis, std::vector<char> banned)
      : t_(std::move(table)), basis_(std::move(basis)), banned_(std::move(banned)) {}

  int rows() const { return static_cast<int>(t_.rows()); }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  const Rational& rhs(int r) const { return t_(r, cols()); }
  const Matrix& table() const { return t_; }
  const std::vector<int>& basis() const { return basis_; }
  std::vector<char>& banned() { return banned_; }

  /// Recomputes reduced costs for maximizing cost^T x.
  void price_out(const std::vector<Rational>& cost) {
    cost_ = cost;
    obj_ = Vector::Constant(cols() + 1, Rational(0));
    for (int j = 0; j < cols(); ++j) obj_(j) = -cost_[j];
    for (int r = 0; r < rows(); ++r) {
      const Rational& cb = cost_[basis_[r]];
      if (cb.is_zero()) continue;
      for (int j = 0; j <= cols(); ++j) {
        if (!t_(r, j).is_zero()) obj_(j) += cb * t_(r, j);
      }
    }
  }

  const Rational& objective_value() const { return obj_(cols()); }

  /// Runs primal simplex iterations; false when unbounded.
  bool optimize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (!banned_[j] && obj_(j).sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rational best;
      for (int r = 0; r < rows(); ++r) {
        if (t_(r, enter).sign() <= 0) continue;
        Rational ratio = rhs(r) / t_(r, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          best = std::move(ratio);
          leave = r;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    const Rational piv = t_(row, col);
    std::vector<int> nz;
    for (int j = 0; j <= cols(); ++j) {
      if (!t_(row, j).is_zero()) {
        t_(row, j) /= piv;
        nz.push_back(j);
      }
    }
    for (int r = 0; r < rows(); ++r) {
      if (r == row || t_(r, col).is_zero()) continue;
      const Rational f = t_(r, col);
      for (int j : nz) t_(r, j) -= f * t_(row, j);
    }
    if (obj_.size() > 0 && !obj_(col).is_zero()) {
      const Rational f = obj_(col);
      for (int j : nz) obj_(j) -= f * t_(row, j);
    }
    basis_[row] = col;
  }

  void remove_row(int row) {
    Matrix next(rows() - 1, t_.cols());
    for (int r = 0, out = 0; r < rows(); ++r) {
      if (r != row) next.row(out++) = t_.row(r);
    }
    t_ = std::move(next);
    basis_.erase(basis_.begin() + row);
  }

 private:
  Matrix t_;
  std::vector<int> basis_;
  std::vector<char> banned_;
  std::vector<Rational> cost_;
  Vector obj_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  const int nv = lp.num_variables();
  const int nr = lp.num_constraints();

  // Normalize to nonnegative right-hand sides.
  std::vector<Relation> rel = lp.relations();
  std::vector<Rational> b = lp.rhs();
  std::vector<Rational> sign(nr, Rational(1));
  for (int r = 0; r < nr; ++r) {
    if (b[r].sign() < 0) {
      sign[r] = Rational(-1);
      b[r] = -b[r];
      if (rel[r] == Relation::LessEqual) {
        rel[r] = Relation::GreaterEqual;
      } else if (rel[r] == Relation::GreaterEqual) {
        rel[r] = Relation::LessEqual;
      }
    }
  }

  int num_slack = 0;
  int num_art = 0;
  for (int r = 0; r < nr; ++r) {
    if (rel[r] != Relation::Equal) ++num_slack;
    if (rel[r] != Relation::LessEqual) ++num_art;
  }
  const int art_begin = nv + num_slack;
  const int cols = art_begin + num_art;

  Matrix table = Matrix::Constant(nr, cols + 1, Rational(0));
  std::vector<int> basis(nr, -1);
  int next_slack = nv;
  int next_art = art_begin;
  for (int r = 0; r < nr; ++r) {
    for (const auto& [v, c] : lp.rows()[r]) table(r, v) = sign[r] * c;
    table(r, cols) = b[r];
    if (rel[r] == Relation::LessEqual) {
      table(r, next_slack) = 1;
      basis[r] = next_slack++;
    } else {
      if (rel[r] == Relation::GreaterEqual) table(r, next_slack++) = -1;
      table(r, next_art) = 1;
      basis[r] = next_art++;
    }
  }

  Tableau tab(std::move(table), std::move(basis), std::vector<char>(cols, 0));

  if (num_art > 0) {
    std::vector<Rational> phase1(cols, Rational(0));
    for (int j = art_begin; j < cols; ++j) phase1[j] = -1;
    tab.price_out(phase1);
    tab.optimize();
    if (tab.objective_value().sign() < 0) return {LpStatus::Infeasible, {}, {}};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int r = tab.rows() - 1; r >= 0; --r) {
      if (tab.basis()[r] < art_begin) continue;
      int col = -1;
      for (int j = 0; j < art_begin; ++j) {
        if (!tab.table()(r, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(r, col);
      } else {
        tab.remove_row(r);
      }
    }
    for (int j = art_begin; j < cols; ++j) tab.banned()[j] = 1;
  }

  std::vector<Rational> cost(cols, Rational(0));
  for (int j = 0; j < nv; ++j) cost[j] = lp.objective()(j);
  tab.price_out(cost);
  if (!tab.optimize()) return {LpStatus::Unbounded, {}, {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x = Vector::Constant(nv, Rational(0));
  for (int r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] < nv) sol.x(tab.basis()[r]) = tab.rhs(r);
  }
  sol.value = tab.objective_value();
  return sol;
}

}  // namespace balfair
