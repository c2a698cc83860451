#pragma once

#include <stdexcept>
#include <string>

namespace dfadec {

/// Caller-supplied data violates a documented precondition or invariant.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A serialized document could not be read; the message carries the
/// position when the underlying parser reports one.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The SAT engine itself failed (missing binary, unparseable output).
/// Never raised for an UNSAT verdict.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Example generation could not satisfy the request.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The frontier search tripped a safety guard (e.g. the size cap).
struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dfadec
