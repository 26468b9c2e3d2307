#ifndef HOCHBRACKET_ERRORS_HPP_
#define HOCHBRACKET_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hb {

// Malformed text or JSON input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group construction failures: singular generators, runaway closure, bad words.
struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical precondition was violated (basis mismatch, non-H input, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hb

#endif  // HOCHBRACKET_ERRORS_HPP_
