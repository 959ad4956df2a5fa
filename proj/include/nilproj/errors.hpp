#pragma once

#include <stdexcept>
#include <string>

namespace nilproj {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// matcore
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct NotRankOneProjection : Error { using Error::Error; };

// arveson
struct IndexOutOfRange : Error { using Error::Error; };

// corank1
struct DomainError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotTerminal : Error { using Error::Error; };
struct SelectionFailure : Error { using Error::Error; };
struct BracketFailure : Error { using Error::Error; };

// pairing
struct NotUnitary : Error { using Error::Error; };
struct NotCorankOne : Error { using Error::Error; };
struct ProfileMismatch : Error { using Error::Error; };

// search
struct NotIsometry : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

}  // namespace nilproj
