#include "linedig/errors.hpp"

namespace linedig {

std::string error_kind(const Error& e) {
  if (dynamic_cast<const IndexOutOfRange*>(&e)) return "IndexOutOfRange";
  if (dynamic_cast<const SizeLimitExceeded*>(&e)) return "SizeLimitExceeded";
  if (dynamic_cast<const PartitionMismatch*>(&e)) return "PartitionMismatch";
  if (dynamic_cast<const NotRegular*>(&e)) return "NotRegular";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const InsufficientPrefix*>(&e)) return "InsufficientPrefix";
  if (dynamic_cast<const HorizonTooSmall*>(&e)) return "HorizonTooSmall";
  if (dynamic_cast<const ParameterOutOfRange*>(&e)) return "ParameterOutOfRange";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const UnsupportedFormat*>(&e)) return "UnsupportedFormat";
  return "Error";
}

}  // namespace linedig
