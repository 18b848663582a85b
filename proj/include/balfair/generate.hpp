#pragma once

#include <cstdint>
#include <random>

#include "balfair/core.hpp"

namespace balfair {

enum class GenClass { Bivalued, TwoTypes, General };

struct GenOptions {
  std::uint64_t seed = 0;
  int n = 2;
  int m = 4;
  int max_value = 9;
  /// Require n | m.
  bool balanced = true;
};

/// Uniform integer in [lo, hi] from the raw engine output, so that streams
/// are identical across standard libraries.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

/// Deterministic random instance with integer values in [0, max_value]:
///   Bivalued: agent i draws a_i > b_i, then each good is a_i or b_i.
///   TwoTypes: two distinct rows, agents assigned at random with both types
///             present when n >= 2.
///   General:  independent entries.
/// Throws InvalidArgument on a bad shape.
Instance generate_instance(GenClass cls, const GenOptions& opts);
Instance generate_instance(GenClass cls, const GenOptions& opts, std::mt19937_64& rng);

}  // namespace balfair
