#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexseg {

/// Operands live in polynomial rings with different variable counts.
class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A LexSpec is malformed, or violates the precondition of a formula.
class spec_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A self-check failed. Always a bug or an exhausted search bound.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string &what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

} // namespace lexseg
