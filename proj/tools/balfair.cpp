#include <iostream>

#include <CLI11.hpp>

#include "balfair/commands.hpp"

int main(int argc, char** argv) {
  using namespace balfair;
  CLI::App app{"Balanced EF1 + fPO allocations of indivisible goods"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Compute a balanced EF1 + fPO allocation with its certificate");
  s->add_option("input", solve.input, "Instance JSON")->required();
  s->add_option("--algorithm", solve.algorithm)->check(CLI::IsMember({"auto", "bivalued", "two-types", "round-robin"}));
  s->add_option("-o,--output", solve.output, "Result JSON (default: stdout)");
  s->add_flag("--reduce", solve.reduce, "Input is unconstrained; solve through dummy goods");
  s->add_flag("-q,--quiet", solve.quiet);

  CheckOptions check;
  std::string prices;
  auto* c = app.add_subcommand("check", "Verify fairness and efficiency of an allocation");
  c->add_option("instance", check.instance)->required();
  c->add_option("allocation", check.allocation, "Allocation or result JSON")->required();
  c->add_flag("--ef1", check.ef1);
  c->add_flag("--fpo", check.fpo);
  c->add_flag("--po", check.po, "Brute force, guarded by --max-states");
  auto* pef1 = c->add_option("--pef1", prices, "Prices JSON for the p-EF1 test");
  c->add_flag("--unconstrained", check.unconstrained);
  c->add_option("--max-states", check.max_states);
  c->add_flag("-q,--quiet", check.quiet);

  EnumerateOptions enumerate;
  auto* e = app.add_subcommand("enumerate", "Tabulate every balanced allocation");
  e->add_option("instance", enumerate.instance)->required();
  e->add_option("--format", enumerate.format)->check(CLI::IsMember({"json", "csv"}));
  e->add_option("-o,--output", enumerate.output);
  e->add_option("--max-states", enumerate.max_states);

  GenOptionsCli gen;
  auto* g = app.add_subcommand("gen", "Generate a random instance");
  g->add_option("--seed", gen.seed);
  g->add_option("--n", gen.n);
  g->add_option("--m", gen.m);
  g->add_option("--class", gen.cls)->check(CLI::IsMember({"bivalued", "two-types", "general"}));
  g->add_option("--max-value", gen.max_value);
  g->add_option("-o,--output", gen.output);

  ReduceOptions reduce;
  auto* r = app.add_subcommand("reduce", "Append dummy goods to an unconstrained instance");
  r->add_option("instance", reduce.instance)->required();
  r->add_option("-o,--output", reduce.output);
  r->add_option("--map", reduce.map_output, "Sidecar path (default: <output>.map.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitInput;
  }

  if (*s) return cmd_solve(solve, std::cout, std::cerr);
  if (*c) {
    if (*pef1) check.pef1_prices = prices;
    return cmd_check(check, std::cout, std::cerr);
  }
  if (*e) return cmd_enumerate(enumerate, std::cout, std::cerr);
  if (*g) return cmd_gen(gen, std::cout, std::cerr);
  return cmd_reduce(reduce, std::cout, std::cerr);
}
