#include "balfair/generate.hpp"

#include "balfair/errors.hpp"

namespace balfair {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

namespace {

RowVector random_row(std::mt19937_64& rng, int m, int max_value) {
  RowVector row(m);
  for (int j = 0; j < m; ++j) row(j) = uniform_int(rng, 0, max_value);
  return row;
}

}  // namespace

Instance generate_instance(GenClass cls, const GenOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  return generate_instance(cls, opts, rng);
}

Instance generate_instance(GenClass cls, const GenOptions& opts, std::mt19937_64& rng) {
  const int n = opts.n;
  const int m = opts.m;
  if (n < 1 || m < 1) throw InvalidArgument("n and m must be positive");
  if (opts.max_value < 1) throw InvalidArgument("max-value must be at least 1");
  if (opts.balanced && m % n != 0) throw InvalidArgument("m must be divisible by n");

  Matrix v(n, m);
  switch (cls) {
    case GenClass::Bivalued:
      for (int i = 0; i < n; ++i) {
        const int a = uniform_int(rng, 1, opts.max_value);
        const int b = uniform_int(rng, 0, a - 1);
        for (int j = 0; j < m; ++j) v(i, j) = uniform_int(rng, 0, 1) ? a : b;
      }
      break;
    case GenClass::TwoTypes: {
      const RowVector u1 = random_row(rng, m, opts.max_value);
      RowVector u2 = random_row(rng, m, opts.max_value);
      while (u2 == u1) u2 = random_row(rng, m, opts.max_value);
      std::vector<int> type(n);
      for (int& t : type) t = uniform_int(rng, 1, 2);
      if (n >= 2) {
        const int first = uniform_int(rng, 0, n - 1);
        const int second = (first + uniform_int(rng, 1, n - 1)) % n;
        type[first] = 1;
        type[second] = 2;
      }
      for (int i = 0; i < n; ++i) v.row(i) = type[i] == 1 ? u1 : u2;
      break;
    }
    case GenClass::General:
      for (int i = 0; i < n; ++i) v.row(i) = random_row(rng, m, opts.max_value);
      break;
  }
  return Instance(std::move(v));
}

}  // namespace balfair
