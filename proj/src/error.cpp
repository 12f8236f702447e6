#include "stegedge/error.hpp"

namespace stegedge {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedData: return "TruncatedData";
    case ErrorCode::UnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::PlaneOutOfRange: return "PlaneOutOfRange";
    case ErrorCode::InvalidImage: return "InvalidImage";
    case ErrorCode::EmptyPayload: return "EmptyPayload";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::InvalidBlockSize: return "InvalidBlockSize";
    case ErrorCode::InsufficientCapacity: return "InsufficientCapacity";
    case ErrorCode::ImageTooNarrow: return "ImageTooNarrow";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::CorruptHeader: return "CorruptHeader";
    case ErrorCode::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PlanMismatch: return "PlanMismatch";
    case ErrorCode::GroupTooShort: return "GroupTooShort";
    case ErrorCode::InvalidMask: return "InvalidMask";
    case ErrorCode::OddPayloadLength: return "OddPayloadLength";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace stegedge
