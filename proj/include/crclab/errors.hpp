#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crclab {

/// Raised when an exhaustive enumeration would exceed a desk-scale limit.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what_is_too_large, std::size_t requested, std::size_t limit)
      : std::runtime_error(what_is_too_large + " too large to enumerate: " +
                           std::to_string(requested) + " > limit " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  [[nodiscard]] std::size_t requested() const { return requested_; }
  [[nodiscard]] std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

}  // namespace crclab
