#pragma once

#include <stdexcept>
#include <string>

namespace rosserlab {

// Malformed surface syntax; carries a byte offset into the input.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// A scenario that cannot be run (bad positions, unsatisfiable preconditions,
// switch demanded at stage 0, ...). CLI exit code 2.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Materializing F_n (or another finite search space) would exceed the
// configured cap. CLI exit code 3.
struct DomainCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Misuse of a library operation (wrong formula shape, out-of-range position).
struct OperationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rosserlab
