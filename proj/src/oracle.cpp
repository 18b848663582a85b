#include "balfair/oracle.hpp"

#include <algorithm>
#include <optional>

#include "balfair/errors.hpp"
#include "balfair/lp.hpp"
#include "balfair/simplex.hpp"
#include "balfair/verify.hpp"

namespace balfair {

namespace {

template <class Pred>
std::vector<Allocation> select(const EnumerationReport& report, Pred pred) {
  std::vector<Allocation> out;
  for (const auto& r : report.records) {
    if (pred(r)) out.push_back(r.allocation);
  }
  return out;
}

bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

// Distinct valuation vectors not Pareto-dominated by any balanced allocation.
std::vector<Vector> pareto_vectors(const Instance& inst, std::uint64_t max_states) {
  std::vector<Vector> all;
  for_each_balanced(
      inst.num_agents(), inst.k(),
      [&](const Allocation& a) {
        all.push_back(valuation_vector(inst, a));
        return true;
      },
      max_states);
  std::sort(all.begin(), all.end(), lex_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Vector> out;
  for (const auto& v : all) {
    bool dominated = false;
    for (const auto& w : all) {
      if (pareto_dominates(w, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Allocation> EnumerationReport::ef1_set() const {
  return select(*this, [](const ReportRecord& r) { return r.ef1; });
}

std::vector<Allocation> EnumerationReport::fpo_set() const {
  return select(*this, [](const ReportRecord& r) { return r.fpo; });
}

std::vector<Allocation> EnumerationReport::ef1_fpo_set() const {
  return select(*this, [](const ReportRecord& r) { return r.ef1 && r.fpo; });
}

const ReportRecord& EnumerationReport::nash_maximizer() const {
  if (records.empty()) throw InvalidArgument("empty report");
  const ReportRecord* best = &records.front();
  for (const auto& r : records) {
    if (r.nash > best->nash) best = &r;
  }
  return *best;
}

EnumerationReport full_report(const Instance& inst, std::uint64_t max_states) {
  EnumerationReport report;
  const Vector ones = constant_vector(inst.num_agents(), 1);
  for_each_balanced(
      inst.num_agents(), inst.k(),
      [&](const Allocation& a) {
        ReportRecord r;
        r.allocation = a;
        r.values = valuation_vector(inst, a);
        r.ef1 = static_cast<bool>(is_ef1(inst, a));
        r.fpo = check_fpo(inst, a).is_fpo();
        r.nash = nash_product(inst, a);
        r.utilitarian = weighted_welfare(inst, a, ones);
        report.records.push_back(std::move(r));
        return true;
      },
      max_states);
  for (auto& r : report.records) {
    r.po = true;
    for (const auto& other : report.records) {
      if (pareto_dominates(other.values, r.values)) {
        r.po = false;
        break;
      }
    }
  }
  return report;
}

Rational max_weighted_welfare_bruteforce(const Instance& inst, const Vector& alpha, std::uint64_t max_states) {
  std::optional<Rational> best;
  for_each_balanced(
      inst.num_agents(), inst.k(),
      [&](const Allocation& a) {
        Rational w = weighted_welfare(inst, a, alpha);
        if (!best || w > *best) best = std::move(w);
        return true;
      },
      max_states);
  return *best;
}

bool is_fpo_by_hull(const Instance& inst, const Allocation& alloc, std::uint64_t max_states) {
  require_allocation(inst, alloc, true);
  const Vector u = valuation_vector(inst, alloc);
  const auto vectors = pareto_vectors(inst, max_states);
  const int n = inst.num_agents();
  const int t = static_cast<int>(vectors.size());

  LinearProgram lp(t);
  const int simplex_row = lp.add_constraint(Relation::Equal, 1);
  for (int s = 0; s < t; ++s) {
    lp.set_coefficient(simplex_row, s, 1);
    lp.set_objective(s, vectors[s].sum());
  }
  for (int i = 0; i < n; ++i) {
    const int row = lp.add_constraint(Relation::GreaterEqual, u(i));
    for (int s = 0; s < t; ++s) lp.set_coefficient(row, s, vectors[s](i));
  }
  const auto sol = solve(lp);
  if (sol.status != LpStatus::Optimal) throw InvariantViolation("hull LP is not feasible at a PO vector");
  return sol.value == u.sum();
}

}  // namespace balfair
