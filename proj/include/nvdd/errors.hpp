#pragma once

#include <stdexcept>
#include <string>

namespace nvdd {

// Base class for everything this library throws on bad geometry or
// bad protocol input. std::invalid_argument is used for plain
// parameter-validation failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geometry
struct DegenerateSegment : Error {
    using Error::Error;
};
struct InvalidPolygon : Error {
    using Error::Error;
};
struct NonPositiveScale : Error {
    using Error::Error;
};

// vdd
struct InvalidN : Error {
    using Error::Error;
};
struct NotDelaunay : Error {
    using Error::Error;
};
struct ParallelBisectors : Error {
    using Error::Error;
};
struct SeedOutside : Error {
    using Error::Error;
};
struct EmptyZone : Error {
    using Error::Error;
};

// models
struct RangeEmpty : Error {
    using Error::Error;
};
struct ShiftFailed : Error {
    using Error::Error;
};
struct ModelNotApplicable : Error {
    using Error::Error;
};

// attacks
struct PointOutsideZone : Error {
    using Error::Error;
};
struct DegenerateConfiguration : Error {
    using Error::Error;
};

// ncd
struct ApproximationUnstable : Error {
    using Error::Error;
};

// wire
struct WireError : Error {
    using Error::Error;
};
struct BadMagic : WireError {
    using WireError::WireError;
};
struct BadVersion : WireError {
    using WireError::WireError;
};
struct LengthMismatch : WireError {
    using WireError::WireError;
};
struct TooManyVertices : WireError {
    using WireError::WireError;
};

} // namespace nvdd
