#pragma once

#include <optional>
#include <string>

#include "balfair/core.hpp"
#include "balfair/exchange_graph.hpp"

namespace balfair {

enum class Algorithm { Auto, Bivalued, TwoTypes, RoundRobin };

/// Parses "auto", "bivalued", "two-types", "round-robin".
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algo);

/// Dual certificate (alpha, q, p); gamma is the type-2 weight of the
/// two-types solver.
struct Certificate {
  Vector alpha;
  std::optional<Rational> gamma;
  Vector q;
  Vector p;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct SolveResult {
  Allocation allocation;
  Certificate certificate;
  Algorithm algorithm;  // the one actually run
};

/// Auto dispatches on classify: single type and General to round-robin,
/// Bivalued and TwoType to their solvers. Forcing a solver on an instance
/// outside its class throws NotBivalued or MoreThanTwoTypes. Round-robin
/// certifies with alpha = 1 (Bellman-Ford potentials when the allocation is
/// utilitarian-optimal, the optimal dual otherwise).
SolveResult solve_instance(const Instance& inst, Algorithm algo = Algorithm::Auto);

struct Checks {
  bool ef1 = false;
  bool fpo = false;
  bool balanced = false;
  /// Certificate is feasible and complementary-slack with the allocation.
  bool certified = false;

  bool all() const { return ef1 && fpo && balanced; }
};

/// Recomputes every check from the allocation and certificate.
Checks recheck(const Instance& inst, const Allocation& alloc, const Certificate& cert);

}  // namespace balfair
