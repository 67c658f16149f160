#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ugfpc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q". Throws Error(Parse) on anything else and
/// Error(Domain) on a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" with den > 0, including integers ("1/1").
std::string to_string(const Rational& value);

BigInt ceil(const Rational& value);
BigInt floor(const Rational& value);
BigInt pow_int(const BigInt& base, unsigned exponent);

inline BigInt numerator_of(const Rational& v) { return boost::multiprecision::numerator(v); }
inline BigInt denominator_of(const Rational& v) { return boost::multiprecision::denominator(v); }

}  // namespace ugfpc
