#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, series JSON, forests, decoration files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input is well-formed but outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Accepts "n", "-n", "n/d" with d != 0; the result is canonicalized.
Rational parse_rational(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hopf
