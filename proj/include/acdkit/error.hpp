#ifndef ACDKIT_ERROR_HPP
#define ACDKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acdkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group is larger than the dense-mode enumeration cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// Group-expression or group-file syntax error. position is a byte offset
/// into the parsed text (0 for file-level errors).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An invariant of a computation failed. Always a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace acdkit

#endif  // ACDKIT_ERROR_HPP
