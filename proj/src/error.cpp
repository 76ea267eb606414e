#include "bolloop/error.hpp"

namespace bolloop {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::SizeGate: return "SizeGate";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotNormalSocle: return "NotNormalSocle";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::FolderViolation: return "FolderViolation";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace bolloop
