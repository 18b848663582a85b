#include "balfair/commands.hpp"

#include <ostream>

#include "balfair/errors.hpp"
#include "balfair/generate.hpp"
#include "balfair/io.hpp"
#include "balfair/lp.hpp"
#include "balfair/oracle.hpp"
#include "balfair/solve.hpp"
#include "balfair/verify.hpp"

namespace balfair {

namespace {

template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NotBivalued& e) {
    err << "inapplicable: " << e.what() << '\n';
    return kExitInapplicable;
  } catch (const MoreThanTwoTypes& e) {
    err << "inapplicable: " << e.what() << '\n';
    return kExitInapplicable;
  } catch (const TooLarge& e) {
    err << "too large: " << e.what() << '\n';
    return kExitInapplicable;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (path) {
    write_text_file(*path, text);
  } else {
    out << text;
  }
}

std::string matrix_text(const Matrix& x) {
  std::string s;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    s += "  agent " + std::to_string(i + 1) + ":";
    for (Eigen::Index j = 0; j < x.cols(); ++j) s += " " + x(i, j).str();
    s += "\n";
  }
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance original = instance_from_json(read_json_file(opts.input), opts.reduce);
    const Algorithm algo = parse_algorithm(opts.algorithm);

    std::optional<ReducedInstance> reduced;
    if (opts.reduce) reduced = reduce_unconstrained(original);
    const Instance& inst = reduced ? reduced->instance : original;

    SolveResult solved = solve_instance(inst, algo);
    Checks checks = recheck(inst, solved.allocation, solved.certificate);
    Allocation alloc = solved.allocation;
    if (reduced) {
      alloc = strip_dummies(solved.allocation, reduced->original_goods);
      checks.ef1 = static_cast<bool>(is_ef1(original, alloc));
      checks.fpo = check_fpo(original, alloc, FpoMode::Unconstrained).is_fpo();
    }

    const bool guaranteed = solved.algorithm != Algorithm::RoundRobin || std::holds_alternative<SingleType>(classify(inst));
    if (guaranteed && !(checks.all() && checks.certified)) {
      throw InvariantViolation(algorithm_name(solved.algorithm) + " output failed re-verification");
    }

    const std::string text = result_to_json({alloc, solved.certificate, checks}).dump(2) + "\n";
    emit(opts.output, text, out);
    if (!opts.quiet && opts.output) {
      out << "algorithm: " << algorithm_name(solved.algorithm) << "\nallocation: "
          << allocation_to_json(alloc).dump() << "\nef1: " << yes_no(checks.ef1) << "  fpo: " << yes_no(checks.fpo)
          << "  balanced: " << yes_no(checks.balanced) << '\n';
    }
    return checks.all() ? kExitOk : kExitCheckFailed;
  });
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = instance_from_json(read_json_file(opts.instance), opts.unconstrained);
    const Allocation alloc = allocation_from_json(read_json_file(opts.allocation));
    require_allocation(inst, alloc, !opts.unconstrained);
    std::optional<Vector> prices;
    if (opts.pef1_prices) prices = prices_from_json(read_json_file(*opts.pef1_prices));
    if (opts.po && opts.unconstrained) throw InvalidArgument("--po supports balanced allocations only");

    const bool any = opts.ef1 || opts.fpo || opts.po || opts.pef1_prices;
    bool all = true;
    auto report = [&](const char* name, const Verdict& v) {
      all = all && v.holds;
      if (opts.quiet) return;
      out << name << ": " << (v.holds ? "holds" : "fails");
      if (v.witness) out << ": " << describe(*v.witness);
      out << '\n';
    };

    if (opts.ef1 || !any) report("EF1", is_ef1(inst, alloc));
    if (opts.fpo || !any) {
      const auto fpo = check_fpo(inst, alloc, opts.unconstrained ? FpoMode::Unconstrained : FpoMode::Balanced);
      all = all && fpo.is_fpo();
      if (!opts.quiet) {
        out << "fPO: " << (fpo.is_fpo() ? "holds" : "fails") << '\n';
        if (!fpo.is_fpo()) {
          out << "dominating fractional allocation (total gain " << fpo.gain << "):\n"
              << matrix_text(*fpo.dominated_by);
        }
      }
    }
    if (opts.po) {
      try {
        report("PO", is_po_bruteforce(inst, alloc, opts.max_states));
      } catch (const TooLarge& e) {
        throw TooLarge(std::string("PO checking is coNP-complete; brute force refused: ") + e.what());
      }
    }
    if (prices) {
      if (prices->size() != inst.num_goods()) throw InvalidArgument("price vector must have m entries");
      report("p-EF1", is_p_ef1(*prices, alloc));
    }
    return all ? kExitOk : kExitCheckFailed;
  });
}

int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.format != "json" && opts.format != "csv") throw InvalidArgument("format must be json or csv");
    const Instance inst = instance_from_json(read_json_file(opts.instance));
    const auto report = full_report(inst, opts.max_states);
    const std::string text = opts.format == "csv" ? report_to_csv(report) : report_to_json(report).dump(2) + "\n";
    emit(opts.output, text, out);
    return kExitOk;
  });
}

int cmd_gen(const GenOptionsCli& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    GenClass cls;
    if (opts.cls == "bivalued") {
      cls = GenClass::Bivalued;
    } else if (opts.cls == "two-types") {
      cls = GenClass::TwoTypes;
    } else if (opts.cls == "general") {
      cls = GenClass::General;
    } else {
      throw InvalidArgument("class must be bivalued, two-types or general");
    }
    const Instance inst = generate_instance(cls, {opts.seed, opts.n, opts.m, opts.max_value, true});
    emit(opts.output, instance_to_json(inst).dump(2) + "\n", out);
    return kExitOk;
  });
}

int cmd_reduce(const ReduceOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = instance_from_json(read_json_file(opts.instance), true);
    const ReducedInstance reduced = reduce_unconstrained(inst);
    emit(opts.output, instance_to_json(reduced.instance).dump(2) + "\n", out);
    std::optional<std::string> map_path = opts.map_output;
    if (!map_path && opts.output) map_path = *opts.output + ".map.json";
    if (map_path) write_text_file(*map_path, reduce_map_to_json(reduced).dump(2) + "\n");
    return kExitOk;
  });
}

}  // namespace balfair
