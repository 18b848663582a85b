#pragma once

#include <string>

#include <json.hpp>

#include "balfair/core.hpp"
#include "balfair/oracle.hpp"
#include "balfair/solve.hpp"

namespace balfair {

using Json = nlohmann::ordered_json;

// Every parser throws InvalidArgument on malformed input. Good and agent
// indices are 1-based on the wire.

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Canonical "p/q" string ("p" for integers).
Json rational_to_json(const Rational& r);
/// Accepts a string "p", "p/q" or a JSON integer.
Rational rational_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"n", "m", "valuations"}. Requires n | m unless allow_indivisible.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j, bool allow_indivisible = false);

Json allocation_to_json(const Allocation& alloc);
/// A list of bundles, or an object with an "allocation" key.
Allocation allocation_from_json(const Json& j);

/// A list, or an object with "prices" or "certificate": {"p"}.
Vector prices_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

struct ResultFile {
  Allocation allocation;
  Certificate certificate;
  Checks checks;
};

Json result_to_json(const ResultFile& result);
ResultFile result_from_json(const Json& j);

/// Sidecar of the reduction: {"original_m", "dummies"}.
Json reduce_map_to_json(const ReducedInstance& reduced);

Json report_to_json(const EnumerationReport& report);
/// Header: index,allocation,v_1..v_n,ef1,po,fpo,nash,utilitarian.
std::string report_to_csv(const EnumerationReport& report);

}  // namespace balfair
