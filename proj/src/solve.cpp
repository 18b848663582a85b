#include "balfair/solve.hpp"

#include "balfair/bivalued.hpp"
#include "balfair/errors.hpp"
#include "balfair/lp.hpp"
#include "balfair/two_types.hpp"
#include "balfair/verify.hpp"

namespace balfair {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "auto") return Algorithm::Auto;
  if (name == "bivalued") return Algorithm::Bivalued;
  if (name == "two-types") return Algorithm::TwoTypes;
  if (name == "round-robin") return Algorithm::RoundRobin;
  throw InvalidArgument("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Bivalued: return "bivalued";
    case Algorithm::TwoTypes: return "two-types";
    case Algorithm::RoundRobin: return "round-robin";
  }
  return "";
}

namespace {

Algorithm resolve(const Instance& inst) {
  const auto cls = classify(inst);
  if (std::holds_alternative<BivaluedClass>(cls)) return Algorithm::Bivalued;
  if (std::holds_alternative<TwoTypeClass>(cls)) return Algorithm::TwoTypes;
  return Algorithm::RoundRobin;
}

Certificate from_potentials(Vector alpha, std::optional<Rational> gamma, const Potentials& pot) {
  return {std::move(alpha), std::move(gamma), pot.q, pot.p};
}

}  // namespace

SolveResult solve_instance(const Instance& inst, Algorithm algo) {
  if (!inst.divisible()) throw InvalidArgument("m must be divisible by n");
  if (algo == Algorithm::Auto) algo = resolve(inst);
  switch (algo) {
    case Algorithm::Bivalued: {
      auto r = solve_bivalued(inst);
      const auto pot = compute_potentials(inst, r.allocation, r.alpha);
      return {r.allocation, from_potentials(r.alpha, std::nullopt, pot), algo};
    }
    case Algorithm::TwoTypes: {
      auto r = solve_two_types(inst);
      return {r.allocation, from_potentials(r.alpha, r.gamma, r.potentials), algo};
    }
    default: {
      const Allocation alloc = round_robin(inst);
      const Vector ones = constant_vector(inst.num_agents(), 1);
      Potentials pot;
      try {
        pot = compute_potentials(inst, alloc, ones);
      } catch (const NegativeCycleError&) {
        pot = solve_dual(inst, ones);
      }
      return {alloc, from_potentials(ones, std::nullopt, pot), Algorithm::RoundRobin};
    }
  }
}

Checks recheck(const Instance& inst, const Allocation& alloc, const Certificate& cert) {
  require_allocation(inst, alloc, false);
  Checks c;
  c.balanced = inst.divisible() && alloc.is_balanced(inst.k());
  c.ef1 = static_cast<bool>(is_ef1(inst, alloc));
  if (!c.balanced) return c;
  c.fpo = check_fpo(inst, alloc).is_fpo();
  const bool shapes = cert.alpha.size() == inst.num_agents() && cert.q.size() == inst.num_agents() &&
                      cert.p.size() == inst.num_goods();
  bool positive = shapes;
  for (Eigen::Index i = 0; positive && i < cert.alpha.size(); ++i) positive = cert.alpha(i).sign() > 0;
  c.certified = positive && verify_complementary_slackness(inst, indicator_matrix(alloc, inst.num_goods()),
                                                          Potentials{cert.q, cert.p}, cert.alpha)
                                .holds();
  return c;
}

}  // namespace balfair
