#pragma once

#include <stdexcept>
#include <string>

namespace balfair {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, shapes, non-partitions, nonpositive weights.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The exchange graph has a negative cycle, so the allocation is not optimal.
class NegativeCycleError : public Error {
 public:
  using Error::Error;
};

class NotBivalued : public Error {
 public:
  using Error::Error;
};

class MoreThanTwoTypes : public Error {
 public:
  using Error::Error;
};

/// Enumeration guard tripped.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// A property guaranteed by construction failed; always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace balfair
