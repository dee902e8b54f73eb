#pragma once

#include <stdexcept>
#include <string>

namespace trigrearr {

/// Malformed input file or command-line value.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold for the given input.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (big-integer bits, flips, ...) was exceeded.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace trigrearr
