#pragma once

#include <stdexcept>
#include <string>

namespace linedig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};
struct SizeLimitExceeded : Error {
  using Error::Error;
};
struct PartitionMismatch : Error {
  using Error::Error;
};
struct NotRegular : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct InsufficientPrefix : Error {
  using Error::Error;
};
struct HorizonTooSmall : Error {
  using Error::Error;
};
struct ParameterOutOfRange : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct UnsupportedFormat : Error {
  using Error::Error;
};

/// Short machine-readable tag for an error, e.g. "NotRegular".
std::string error_kind(const Error& e);

}  // namespace linedig
