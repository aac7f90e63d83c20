#pragma once

#include <stdexcept>
#include <string>

namespace posbraid {

/// Malformed user input (word syntax, JSON); the CLI maps it to exit code 2.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain; the CLI maps it to exit code 3.
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace posbraid
