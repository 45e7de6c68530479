#pragma once

#include <stdexcept>
#include <string>

namespace flrv {

// Base for every error the library throws. Specific conditions are
// distinct subclasses so callers can catch exactly what they handle.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// raster
struct UnknownFormat : Error { using Error::Error; };
struct CorruptStream : Error { using Error::Error; };
struct ZeroDimension : Error { using Error::Error; };
struct ZeroFactor    : Error { using Error::Error; };

// filter / morph grids
struct EvenDimension : Error { using Error::Error; };

// blob
struct UnknownLabel : Error { using Error::Error; };

// diagnose
struct DimensionMismatch : Error { using Error::Error; };
struct MalformedReport   : Error { using Error::Error; };

// config / world files
struct BadConfig : Error { using Error::Error; };
struct BadWorld  : Error { using Error::Error; };

// pilot
struct NonPositiveDt : Error { using Error::Error; };

// wire
struct BadMagic           : Error { using Error::Error; };
struct UnsupportedVersion : Error { using Error::Error; };
struct UnknownType        : Error { using Error::Error; };
struct Oversize           : Error { using Error::Error; };
struct Truncated          : Error { using Error::Error; };
struct ConnectionFailed   : Error { using Error::Error; };
struct ProtocolError      : Error { using Error::Error; };

} // namespace flrv
