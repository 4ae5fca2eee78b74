#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

/* Domain errors: mathematically invalid input or a failed operation
   precondition. The CLI maps these to exit code 1. */
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : MathError {
    using MathError::MathError;
};

/* Exact division failed, or division by zero. */
struct DivisionError : MathError {
    using MathError::MathError;
};

/* An object or relation could not be built (no unit pivot available,
   non-unitary matrix passed to graph, degenerate form, ...). */
struct ConstructionError : MathError {
    using MathError::MathError;
};

/* A tangle word failed validation against its boundary data. */
struct ValidationError : MathError {
    using MathError::MathError;
};

/* Malformed textual or JSON input. The CLI maps this to exit code 2. */
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tangles
