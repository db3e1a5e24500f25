#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ringlab {

// All probability and bound arithmetic is exact; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" in lowest terms, q > 0, always with the slash ("3" -> "3/1").
std::string to_fraction_string(const Rational& r);

// Accepts "p/q" or a bare integer "p". Throws Error(SchemaError) on junk.
Rational parse_fraction(const std::string& s);

// True iff r is an integer and fits the reported edge-count range.
bool is_integer(const Rational& r);
long long to_integer(const Rational& r);

} // namespace ringlab
