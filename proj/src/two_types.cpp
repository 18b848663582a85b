#include "balfair/two_types.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "balfair/errors.hpp"
#include "balfair/lp.hpp"
#include "balfair/verify.hpp"

namespace balfair {

Vector TwoTypeInstance::alpha(const Rational& gamma) const {
  Vector a = Vector::Constant(instance.num_agents(), Rational(1));
  for (int i : type2_agents) a(i) = gamma;
  return a;
}

TwoTypeInstance make_two_type(const Instance& inst) {
  TwoTypeInstance tt{inst, inst.row(0), RowVector(), {}, {}};
  for (int i = 0; i < inst.num_agents(); ++i) {
    if (inst.row(i) == tt.u1) {
      tt.type1_agents.push_back(i);
    } else if (tt.type2_agents.empty() || inst.row(i) == tt.u2) {
      if (tt.type2_agents.empty()) tt.u2 = inst.row(i);
      tt.type2_agents.push_back(i);
    } else {
      throw MoreThanTwoTypes("instance has more than two distinct valuation rows");
    }
  }
  return tt;
}

Rational compute_delta(const RowVector& u1, const RowVector& u2) {
  std::optional<Rational> min_diff;
  Rational top(0);
  for (const RowVector* u : {&u1, &u2}) {
    for (Eigen::Index j = 0; j < u->size(); ++j) {
      top = max(top, (*u)(j));
      for (Eigen::Index jj = 0; jj < u->size(); ++jj) {
        if ((*u)(j) > (*u)(jj)) {
          Rational d = (*u)(j) - (*u)(jj);
          if (!min_diff || d < *min_diff) min_diff = std::move(d);
        }
      }
    }
  }
  if (!min_diff) throw InvalidArgument("all values are equal within each type; delta is undefined");
  return *min_diff / (top + 1);
}

Rational GammaGrid::point(int l) const {
  if (l < 0 || l > num_criticals() + 1) throw InvalidArgument("grid index out of range");
  if (l == 0) return delta;
  if (l == num_criticals() + 1) return Rational(1) / delta;
  return criticals[l - 1];
}

GammaGrid critical_values(const RowVector& u1, const RowVector& u2) {
  GammaGrid grid{compute_delta(u1, u2), {}};
  const Rational upper = Rational(1) / grid.delta;
  std::set<Rational> values;
  for (Eigen::Index j = 0; j < u1.size(); ++j) {
    for (Eigen::Index jj = 0; jj < u1.size(); ++jj) {
      if (u1(j) > u1(jj) && u2(j) > u2(jj)) {
        Rational g = (u1(j) - u1(jj)) / (u2(j) - u2(jj));
        if (g > grid.delta && g < upper) values.insert(std::move(g));
      }
    }
  }
  grid.criticals.assign(values.begin(), values.end());
  return grid;
}

Split optimal_split(const RowVector& u1, const RowVector& u2, const Rational& gamma, int n1, int k) {
  const int m = static_cast<int>(u1.size());
  std::vector<Rational> score(m);
  for (int j = 0; j < m; ++j) score[j] = u1(j) - gamma * u2(j);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });
  Split s;
  s.type1_goods.assign(order.begin(), order.begin() + n1 * k);
  s.type2_goods.assign(order.begin() + n1 * k, order.end());
  std::sort(s.type1_goods.begin(), s.type1_goods.end());
  std::sort(s.type2_goods.begin(), s.type2_goods.end());
  return s;
}

std::vector<Bundle> round_robin_by_price(std::span<const int> goods, const Vector& prices, int agents, int k) {
  if (agents < 0 || k < 0 || static_cast<long>(goods.size()) != static_cast<long>(agents) * k) {
    throw InvalidArgument("round-robin needs exactly agents * k goods");
  }
  std::vector<int> order(goods.begin(), goods.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (prices(a) != prices(b)) return prices(a) > prices(b);
    return a < b;
  });
  std::vector<Bundle> bundles(agents);
  for (std::size_t t = 0; t < order.size(); ++t) bundles[t % agents].push_back(order[t]);
  for (auto& b : bundles) std::sort(b.begin(), b.end());
  return bundles;
}

Allocation TypedAllocation::to_allocation(const TwoTypeInstance& tt) const {
  std::vector<Bundle> bundles(tt.instance.num_agents());
  for (std::size_t t = 0; t < x.size(); ++t) bundles[tt.type1_agents[t]] = x[t];
  for (std::size_t t = 0; t < y.size(); ++t) bundles[tt.type2_agents[t]] = y[t];
  return Allocation(std::move(bundles));
}

TypedAllocation deal_split(const TwoTypeInstance& tt, const Split& split, const Rational& gamma,
                           const Potentials& potentials) {
  TypedAllocation t;
  t.x = round_robin_by_price(split.type1_goods, potentials.p, tt.n1(), tt.k());
  t.y = round_robin_by_price(split.type2_goods, potentials.p, tt.n2(), tt.k());
  t.gamma = gamma;
  t.potentials = potentials;
  return t;
}

TypedAllocation make_typed_allocation(const TwoTypeInstance& tt, const Split& split, const Rational& gamma) {
  TypedAllocation index_deal;
  index_deal.x = round_robin_by_price(split.type1_goods, Vector::Constant(tt.instance.num_goods(), Rational(0)),
                                      tt.n1(), tt.k());
  index_deal.y = round_robin_by_price(split.type2_goods, Vector::Constant(tt.instance.num_goods(), Rational(0)),
                                      tt.n2(), tt.k());
  const auto pot = compute_potentials(tt.instance, index_deal.to_allocation(tt), tt.alpha(gamma));
  return deal_split(tt, split, gamma, pot);
}

Rational condition_a_margin(const TypedAllocation& t) {
  return price_of(t.potentials.p, t.x.back()) - price_hat(t.potentials.p, t.y.front());
}

Rational condition_b_margin(const TypedAllocation& t) {
  return price_of(t.potentials.p, t.y.back()) - price_hat(t.potentials.p, t.x.front());
}

ConditionsAB conditions_ab(const TypedAllocation& t) {
  if (t.x.empty() || t.y.empty()) throw InvalidArgument("conditions (a)/(b) need agents of both types");
  const ConditionsAB c{condition_a_margin(t).sign() >= 0, condition_b_margin(t).sign() >= 0};
  if (!c.a && !c.b) throw InvariantViolation("neither condition (a) nor (b) holds");
  return c;
}

namespace {

void record(TwoTypesTrace* trace, TwoTypesPath phase, int interval, const TwoTypeInstance& tt,
            const TypedAllocation& t, const ConditionsAB& c) {
  if (!trace) return;
  trace->entries.push_back({phase, interval, t.gamma, t.to_allocation(tt), t.potentials.p, c});
}

// Linear function c0 + c1 * gamma.
struct Line {
  Rational c0;
  Rational c1;

  Rational at(const Rational& g) const { return c0 + c1 * g; }
  friend Line operator+(const Line& a, const Line& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
  friend Line operator-(const Line& a, const Line& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
};

struct LineArc {
  int from;
  int to;
  Line weight;
};

// Exchange graph of an allocation with weights linear in gamma (node ids as
// in ExchangeGraph).
std::vector<LineArc> parametric_arcs(const TwoTypeInstance& tt, const Allocation& alloc) {
  const int n = tt.instance.num_agents();
  const int m = tt.instance.num_goods();
  std::vector<char> is_type2(n, 0);
  for (int i : tt.type2_agents) is_type2[i] = 1;
  auto scaled = [&](int agent, const Rational& w) { return is_type2[agent] ? Line{0, w} : Line{w, 0}; };

  std::vector<LineArc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) arcs.push_back({i, n + j, scaled(i, -tt.instance.value(i, j))});
  }
  const auto owner = alloc.owners(m);
  for (int j = 0; j < m; ++j) arcs.push_back({n + j, owner[j], scaled(owner[j], tt.instance.value(owner[j], j))});
  for (int j = 0; j < m; ++j) arcs.push_back({n + m, n + j, Line{0, 0}});
  return arcs;
}

// Shortest distances as lines that are exact on [gamma, gamma + eta) for some
// eta > 0: Bellman-Ford under the order (value at gamma, slope).
std::vector<Line> right_shortest_lines(const std::vector<LineArc>& arcs, int num_nodes, int root,
                                       const Rational& gamma) {
  std::vector<std::optional<Line>> dist(num_nodes);
  dist[root] = Line{0, 0};
  auto better = [&](const Line& a, const Line& b) {
    const Rational va = a.at(gamma), vb = b.at(gamma);
    return va < vb || (va == vb && a.c1 < b.c1);
  };
  bool changed = true;
  for (int round = 0; changed; ++round) {
    if (round > num_nodes) throw InvariantViolation("parametric shortest paths did not converge");
    changed = false;
    for (const auto& a : arcs) {
      if (!dist[a.from]) continue;
      Line cand = *dist[a.from] + a.weight;
      if (!dist[a.to] || better(cand, *dist[a.to])) {
        dist[a.to] = std::move(cand);
        changed = true;
      }
    }
  }
  std::vector<Line> out;
  out.reserve(num_nodes);
  for (auto& d : dist) out.push_back(d.value());
  return out;
}

// Interval ends plus every gamma in (lo, hi) where some potential changes
// slope or two goods' prices cross. Between consecutive returned points the
// potentials are linear and the price order is constant.
std::vector<Rational> sweep_breakpoints(const TwoTypeInstance& tt, const Split& split, const Rational& lo,
                                        const Rational& hi) {
  const int n = tt.instance.num_agents();
  const int m = tt.instance.num_goods();
  const TypedAllocation base = make_typed_allocation(tt, split, lo);
  const auto arcs = parametric_arcs(tt, base.to_allocation(tt));

  std::set<Rational> points{lo, hi};
  Rational gamma = lo;
  while (gamma < hi) {
    const auto d = right_shortest_lines(arcs, n + m + 1, n + m, gamma);
    Rational next = hi;
    for (const auto& a : arcs) {
      const Line slack = d[a.from] + a.weight - d[a.to];
      if (slack.c1.sign() < 0) {
        Rational root = -slack.c0 / slack.c1;
        if (root > gamma && root < next) next = std::move(root);
      }
    }
    for (int j = 0; j < m; ++j) {
      for (int jj = j + 1; jj < m; ++jj) {
        const Line diff = d[n + j] - d[n + jj];
        if (diff.c1.is_zero()) continue;
        Rational root = -diff.c0 / diff.c1;
        if (root > gamma && root < next) points.insert(std::move(root));
      }
    }
    points.insert(next);
    gamma = next;
  }
  return {points.begin(), points.end()};
}

// Root in (x0, x1) of the line through (x0, f0), (x1, f1) when f0, f1 have
// strictly opposite signs.
std::optional<Rational> crossing(const Rational& x0, const Rational& f0, const Rational& x1, const Rational& f1) {
  if (f0.sign() * f1.sign() >= 0) return std::nullopt;
  return x0 + f0 * (x1 - x0) / (f0 - f1);
}

void require_slackness(const TwoTypeInstance& tt, const TypedAllocation& t) {
  const auto check = verify_complementary_slackness(
      tt.instance, indicator_matrix(t.to_allocation(tt), tt.instance.num_goods()), t.potentials, tt.alpha(t.gamma));
  if (!check.holds()) throw InvariantViolation("redistribution is not optimal at its gamma");
}

bool all_equal(const RowVector& u) {
  for (Eigen::Index j = 1; j < u.size(); ++j) {
    if (u(j) != u(0)) return false;
  }
  return true;
}

TwoTypesResult finish(const TwoTypeInstance& tt, const TypedAllocation& t, TwoTypesPath path, int interval) {
  require_slackness(tt, t);
  return {t.to_allocation(tt), t.gamma, tt.alpha(t.gamma), t.potentials, path, interval};
}

Rational midpoint(const GammaGrid& grid, int ell) { return (grid.point(ell - 1) + grid.point(ell)) / 2; }

}  // namespace

TypedAllocation gamma_sweep(const TwoTypeInstance& tt, const GammaGrid& grid, int ell, TwoTypesTrace* trace) {
  if (ell < 1 || ell > grid.num_intervals()) throw InvalidArgument("interval index out of range");
  const Rational lo = grid.point(ell - 1);
  const Rational hi = grid.point(ell);
  const Split split = optimal_split(tt.u1, tt.u2, midpoint(grid, ell), tt.n1(), tt.k());

  const auto candidates = sweep_breakpoints(tt, split, lo, hi);
  std::vector<Rational> margin_a, margin_b;
  for (const auto& g : candidates) {
    const auto t = make_typed_allocation(tt, split, g);
    margin_a.push_back(condition_a_margin(t));
    margin_b.push_back(condition_b_margin(t));
  }
  if (margin_a.front().sign() < 0 || margin_b.back().sign() < 0) {
    throw InvalidArgument("gamma sweep requires (a) at the left end and (b) at the right end");
  }

  std::set<Rational> points(candidates.begin(), candidates.end());
  for (std::size_t s = 0; s + 1 < candidates.size(); ++s) {
    for (const auto* f : {&margin_a, &margin_b}) {
      if (auto r = crossing(candidates[s], (*f)[s], candidates[s + 1], (*f)[s + 1])) points.insert(*r);
    }
  }

  for (const auto& g : points) {
    auto t = make_typed_allocation(tt, split, g);
    const auto c = conditions_ab(t);
    record(trace, TwoTypesPath::Sweep, ell, tt, t, c);
    if (c.a && c.b) return t;
  }
  throw InvariantViolation("gamma sweep found no gamma satisfying (a) and (b)");
}

TypedAllocation split_exchange(const TwoTypeInstance& tt, const GammaGrid& grid, int ell, TwoTypesTrace* trace) {
  if (ell < 1 || ell >= grid.num_intervals()) throw InvalidArgument("interval index out of range");
  const Rational gamma = grid.point(ell);
  const Split from = optimal_split(tt.u1, tt.u2, midpoint(grid, ell), tt.n1(), tt.k());
  const Split to = optimal_split(tt.u1, tt.u2, midpoint(grid, ell + 1), tt.n1(), tt.k());
  const Potentials pot = make_typed_allocation(tt, from, gamma).potentials;

  std::set<int> s(from.type1_goods.begin(), from.type1_goods.end());
  std::set<int> t(from.type2_goods.begin(), from.type2_goods.end());
  const std::set<int> target_s(to.type1_goods.begin(), to.type1_goods.end());
  const std::set<int> target_t(to.type2_goods.begin(), to.type2_goods.end());

  for (;;) {
    const Split current{{s.begin(), s.end()}, {t.begin(), t.end()}};
    auto dealt = deal_split(tt, current, gamma, pot);
    require_slackness(tt, dealt);
    const auto c = conditions_ab(dealt);
    record(trace, TwoTypesPath::Exchange, ell, tt, dealt, c);
    if (is_ef1(tt.instance, dealt.to_allocation(tt))) return dealt;
    if (s == target_s) break;

    const int j1 = *std::find_if(s.begin(), s.end(), [&](int j) { return target_t.count(j) > 0; });
    const int j2 = *std::find_if(t.begin(), t.end(), [&](int j) { return target_s.count(j) > 0; });
    s.erase(j1);
    s.insert(j2);
    t.erase(j2);
    t.insert(j1);
  }
  throw InvariantViolation("split exchange reached the next split without an EF1 allocation");
}

TwoTypesResult solve_two_types(const Instance& inst, TwoTypesTrace* trace) {
  const TwoTypeInstance tt = make_two_type(inst);
  const int k = tt.k();

  if (tt.n2() == 0 || (all_equal(tt.u1) && all_equal(tt.u2))) {
    const Allocation alloc = round_robin(inst);
    const Vector alpha = Vector::Constant(inst.num_agents(), Rational(1));
    const auto path = tt.n2() == 0 ? TwoTypesPath::SingleType : TwoTypesPath::Trivial;
    return {alloc, Rational(1), alpha, compute_potentials(inst, alloc, alpha), path, 0};
  }

  const GammaGrid grid = critical_values(tt.u1, tt.u2);
  const int intervals = grid.num_intervals();
  // conds[ell - 1][0] at gamma_{ell-1}, [1] at gamma_ell.
  std::vector<std::array<ConditionsAB, 2>> conds(intervals);
  for (int ell = 1; ell <= intervals; ++ell) {
    const Split split = optimal_split(tt.u1, tt.u2, midpoint(grid, ell), tt.n1(), k);
    for (int side = 0; side < 2; ++side) {
      const auto t = make_typed_allocation(tt, split, grid.point(ell - 1 + side));
      conds[ell - 1][side] = conditions_ab(t);
      record(trace, TwoTypesPath::Endpoint, ell, tt, t, conds[ell - 1][side]);
      if (is_ef1(inst, t.to_allocation(tt))) return finish(tt, t, TwoTypesPath::Endpoint, ell);
    }
  }

  for (int ell = 1; ell <= intervals; ++ell) {
    if (conds[ell - 1][0].a && conds[ell - 1][1].b) {
      return finish(tt, gamma_sweep(tt, grid, ell, trace), TwoTypesPath::Sweep, ell);
    }
  }
  for (int ell = 1; ell < intervals; ++ell) {
    if (conds[ell - 1][1].a && conds[ell][0].b) {
      return finish(tt, split_exchange(tt, grid, ell, trace), TwoTypesPath::Exchange, ell);
    }
  }
  throw InvariantViolation("neither the gamma sweep nor the split exchange applies");
}

}  // namespace balfair
