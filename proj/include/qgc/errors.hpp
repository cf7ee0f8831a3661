#pragma once

#include <stdexcept>
#include <string>

namespace qgc {

// Operand sizes disagree (qubit counts, syndrome lengths, wire counts).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An input object violates the invariants an operation requires.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A request is outside what the implementation supports (non-Clifford gate, capacity).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qgc
