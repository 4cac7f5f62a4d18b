#pragma once
// Exact integer and rational arithmetic used throughout wlink.
//
// Everything is GMP-backed. Note that gmpxx returns expression templates from
// arithmetic operators, so never bind the result of an operator to `auto`.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wlink {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational p/q. Throws Error(InvalidInput) when q == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Accepts "p", "p/q" or "-p/q" with optional leading '+'. The result is
/// canonicalized, so "4/6" parses to 2/3.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

bool is_integral(const Rational& value);
BigInt floor(const Rational& value);
Rational abs(const Rational& value);

/// Converts a BigInt that must fit into a signed 64-bit integer. Throws
/// Error(InvalidInput) otherwise.
std::int64_t to_int64(const BigInt& value);

}  // namespace wlink
