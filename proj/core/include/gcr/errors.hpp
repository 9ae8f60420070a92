#pragma once

#include <stdexcept>
#include <string>

namespace gcr {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// minkowski
struct NullArgument : Error { using Error::Error; };
struct BothSpaceLike : Error { using Error::Error; };
struct NullVector : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };

// curves / profiles / surfaces
struct OutOfDomain : Error { using Error::Error; };
struct DegenerateSample : Error { using Error::Error; };
struct AngleUnsolvable : Error { using Error::Error; };
struct KindMismatch : Error { using Error::Error; };

// surface geometry
struct StencilOutOfDomain : Error { using Error::Error; };
struct DegenerateTangentPlane : Error { using Error::Error; };
struct NotSpaceLike : Error { using Error::Error; };
struct DegenerateMetric : Error { using Error::Error; };

// verifier
struct NullPosition : Error { using Error::Error; };
struct InconsistentAngle : Error { using Error::Error; };
struct DegenerateTangential : Error { using Error::Error; };
struct UmbilicRegion : Error { using Error::Error; };

// io / cli
struct ConfigError : Error { using Error::Error; };

} // namespace gcr
