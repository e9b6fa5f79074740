#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace zigzag {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input (words, templates, paintboxes, models).
struct ParseError : Error {
    using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// Something that the underlying theory rules out actually happened.
struct InternalError : Error {
    using Error::Error;
};

// Parses "p", "p/q" or "-p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace zigzag
