#include "zpsum/error.hpp"

namespace zpsum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NoComplementNeeded: return "NoComplementNeeded";
    case ErrorCode::EvenPrimeUnsupported: return "EvenPrimeUnsupported";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::TooManySubmultisets: return "TooManySubmultisets";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::ZeroInMultiset: return "ZeroInMultiset";
    case ErrorCode::NotOnOneLine: return "NotOnOneLine";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::InvalidMultiset: return "InvalidMultiset";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::JOutOfRange: return "JOutOfRange";
    case ErrorCode::ZeroTarget: return "ZeroTarget";
    case ErrorCode::AutomorphismGroupTooLarge: return "AutomorphismGroupTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ShardOutOfRange: return "ShardOutOfRange";
    case ErrorCode::CorruptCheckpoint: return "CorruptCheckpoint";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace zpsum
