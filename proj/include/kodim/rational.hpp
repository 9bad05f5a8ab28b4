#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kodim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

double to_double(const Rational& r);

/// -1, 0 or 1.
int sign(const Rational& r);

}  // namespace kodim
