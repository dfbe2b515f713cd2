#pragma once

#include <stdexcept>
#include <string>

namespace qweave {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownVertexError : Error {
  using Error::Error;
};

struct InvalidTopologyError : Error {
  using Error::Error;
};

struct InvalidK0Error : Error {
  using Error::Error;
};

struct NotMergedError : Error {
  using Error::Error;
};

struct AlreadyMergedError : Error {
  using Error::Error;
};

struct UnknownLabelError : Error {
  using Error::Error;
};

struct InvalidParamsError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

struct OrbitCapError : Error {
  using Error::Error;
};

struct NotFactorizedError : Error {
  using Error::Error;
};

struct SessionError : Error {
  using Error::Error;
};

}  // namespace qweave
