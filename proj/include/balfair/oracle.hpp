#pragma once

#include <cstdint>
#include <vector>

#include "balfair/core.hpp"
#include "balfair/enumerate.hpp"

namespace balfair {

struct ReportRecord {
  Allocation allocation;
  Vector values;
  bool ef1 = false;
  bool po = false;
  bool fpo = false;
  Rational nash;
  Rational utilitarian;
};

/// One record per balanced allocation, in enumeration order.
struct EnumerationReport {
  std::vector<ReportRecord> records;

  std::vector<Allocation> ef1_set() const;
  std::vector<Allocation> fpo_set() const;
  std::vector<Allocation> ef1_fpo_set() const;
  /// First record with the largest Nash product.
  const ReportRecord& nash_maximizer() const;
};

/// EF1 by definition, PO by pairwise comparison of valuation vectors, fPO by
/// the exact LP test. Throws TooLarge.
EnumerationReport full_report(const Instance& inst, std::uint64_t max_states = kDefaultMaxStates);

/// Max of sum_i alpha_i v_i(A_i) over all balanced allocations.
Rational max_weighted_welfare_bruteforce(const Instance& inst, const Vector& alpha,
                                         std::uint64_t max_states = kDefaultMaxStates);

/// fPO test independent of the allocation LP: alloc is fPO iff no convex
/// combination of the Pareto-optimal integral valuation vectors weakly
/// dominates it with a larger total.
bool is_fpo_by_hull(const Instance& inst, const Allocation& alloc, std::uint64_t max_states = kDefaultMaxStates);

}  // namespace balfair
