#pragma once

#include <stdexcept>
#include <string>

namespace mixq {

// Malformed input documents or number literals.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (levels outside [0,1], invalid
// distribution parameters, unsupported component pairings).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A result that the mixture-quantile theory rules out was computed anyway,
// e.g. an impossible case cell. Always indicates a bug.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mixq
