#pragma once

#include <stdexcept>
#include <string>

namespace crowdtraits {

/// Base class for all crowdtraits errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data (CSV/JSON). Message names the offending line.
struct ParseError : Error {
    using Error::Error;
};

/// Two samples share the same (person_id, frame).
struct DuplicateSampleError : ParseError {
    using ParseError::ParseError;
};

/// Not enough data to perform an operation (e.g. < 2 trajectory samples,
/// < 4 homography correspondences).
struct InsufficientDataError : Error {
    using Error::Error;
};

/// Degenerate point configuration; the linear system has no usable solution.
struct SingularSystemError : Error {
    using Error::Error;
};

/// Homogeneous division by zero when applying a projective map.
struct PointAtInfinityError : Error {
    using Error::Error;
};

/// A frame with zero individuals where at least one is required.
struct EmptyFrameError : Error {
    using Error::Error;
};

/// Person id not present in the analyzed video.
struct MissingPersonError : Error {
    using Error::Error;
};

/// Synthetic scenario parameters cannot be realized.
struct InfeasibleScenarioError : Error {
    using Error::Error;
};

/// Pearson correlation undefined (zero variance or length mismatch).
struct UndefinedCorrelationError : Error {
    using Error::Error;
};

/// Filesystem failure; message carries the path.
struct IoError : Error {
    using Error::Error;
};

/// Input file does not match the expected schema.
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace crowdtraits
