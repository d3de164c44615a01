#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gstest {

// Numeric input outside the domain a formula is valid on.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Enumeration support exceeds the hard cap; 4^13 items and up is refused.
struct SupportTooLarge : std::length_error {
  using std::length_error::length_error;
};

struct VertexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Malformed textual input: Pauli strings, graph JSON, config files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lattice spec violates its constraints (non-positive cells, periodic L < 2).
struct SpecInvalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense statevector would exceed the oracle qubit cap.
struct TooManyQubits : std::length_error {
  using std::length_error::length_error;
};

// The graph cannot supply the requested number of test vertices.
struct InsufficientVertices : std::runtime_error {
  InsufficientVertices(const std::string& msg, std::size_t found_count)
      : std::runtime_error(msg), found(found_count) {}
  std::size_t found;
};

}  // namespace gstest
