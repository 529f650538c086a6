#ifndef VERBA_ERRORS_HPP
#define VERBA_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace verba {

/// Raised when an enumeration or tuple scan would exceed a configured cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error(what + " (required " + std::to_string(required) +
                           ", cap " + std::to_string(cap) + ")"),
        required_(required), cap_(cap) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Word-grammar syntax error; `position` is a 0-based offset into the input.
class WordParseError : public std::runtime_error {
public:
  WordParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace verba

#endif
