#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zpsum {

enum class ErrorCode {
  NonPrime,
  RankZero,
  OrderTooLarge,
  RankOutOfRange,
  NoComplementNeeded,
  EvenPrimeUnsupported,
  KOutOfRange,
  TooManySubmultisets,
  GroupMismatch,
  ZeroInMultiset,
  NotOnOneLine,
  EmptyPartition,
  InvalidMultiset,
  SizeOutOfRange,
  JOutOfRange,
  ZeroTarget,
  AutomorphismGroupTooLarge,
  BudgetExceeded,
  ShardOutOfRange,
  CorruptCheckpoint,
  SyntaxError,
  DimensionMismatch,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the literal parser; offset is the byte position of the problem.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace zpsum
