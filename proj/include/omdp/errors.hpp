#pragma once

#include <stdexcept>
#include <string>

namespace omdp {

// Tuple of the wrong length, an out-of-range element, or a repeated element
// where a basis is required.
struct MalformedTuple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the operation's domain (e.g. a normalizing element that
// is not in the support).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input whose content is inconsistent (e.g. a facet-vertex
// matrix with disagreeing edge orientations).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation requested on a value in the wrong state (e.g. decoding a model
// from an unsat result).
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

// An invariant that the library itself should guarantee was violated.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace omdp
