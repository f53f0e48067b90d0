#pragma once

#include <stdexcept>
#include <string>

namespace cfsynth {

/// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tensor/layer dimension mismatch.
struct ShapeError : Error {
    using Error::Error;
};

/// Malformed input file contents (carries line numbers where known).
struct ParseError : Error {
    using Error::Error;
};

/// Violated domain precondition or invariant (bad parameter, bad data).
struct ValidationError : Error {
    using Error::Error;
};

/// Filesystem / stream failure, or a corrupt artifact.
struct IoError : Error {
    using Error::Error;
};

/// Numeric failure during training (divergence, non-finite values).
struct TrainingError : Error {
    using Error::Error;
};

} // namespace cfsynth
