#pragma once

#include <stdexcept>
#include <string>

namespace quiverforge {

// Domain error raised by every library operation. The CLI maps it to exit
// status 1 and a JSON error object.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal cross-check fails (a bug, not bad input).
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error("internal: " + what) {}
};

}  // namespace quiverforge
