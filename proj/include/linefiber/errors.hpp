#pragma once

#include <stdexcept>
#include <string>

namespace linefiber {

// Input could not be parsed or fails structural validation (CLI exit 3).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input parses but violates a hypothesis the pipeline needs, e.g. a point of
// multiplicity above three or a pencil (CLI exit 2).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An identity that must hold for every valid run was violated (CLI exit 1).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Misuse of the field layer: mixed cyclotomic orders, inverse of zero.
struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Random arrangement search exhausted its attempt budget.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace linefiber
