#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdom {

/// Raised when a computation contradicts a proven statement it validates.
/// Reaching this is always a bug (or a counterexample worth publishing).
class TheoremFalsified : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph text. `position` is a byte offset for graph6 and a
/// 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cdom
