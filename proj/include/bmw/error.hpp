#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bmw {

/// Raised by every text grammar in the library. `offset()` is the byte
/// position in the input where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset),
        reason_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset suffix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

/// Operands built over different strand counts.
class StrandMismatch : public std::invalid_argument {
 public:
  StrandMismatch(int lhs, int rhs)
      : std::invalid_argument("strand count mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

}  // namespace bmw
