#pragma once

#include <stdexcept>

namespace skewsign {

// Base class for input and contract violations raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedPartition : Error { using Error::Error; };
struct InvalidShape : Error { using Error::Error; };
struct BoundTooSmall : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct NoTiling : Error { using Error::Error; };
struct OddSize : Error { using Error::Error; };
struct OddN : Error { using Error::Error; };
struct CapMismatch : Error { using Error::Error; };

}  // namespace skewsign
