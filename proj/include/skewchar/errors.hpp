#pragma once

#include <stdexcept>
#include <string>

namespace skewchar {

// Raised when an operation's domain precondition does not hold
// (inner not contained in outer, a partition that does not fit a box, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A multiplicity left the range of uint64_t, or an instance exceeded a size guard.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A structural fact about northwest ribbons was violated. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace skewchar
