#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilrank {

/// Arbitrary-precision integer used for every exponent in the library.
using Integer = mpz_class;
using IntVec = std::vector<Integer>;

/// Raised when an operation's precondition is violated by caller input.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation contradicts a proven result. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses a decimal integer with an optional sign. Anything else
/// (whitespace, decimal points, exponents, hex) is rejected.
Integer parse_integer(std::string_view text);

/// Parses a comma-separated list of decimal integers.
IntVec parse_integer_list(std::string_view text);

inline std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const IntVec& values);

inline int sign(const Integer& value) { return sgn(value); }

}  // namespace nilrank
