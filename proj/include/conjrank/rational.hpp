#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace conjrank {

using Integer = boost::multiprecision::cpp_int;
// Arbitrary-precision rational, always in lowest terms with positive
// denominator.  No floating point appears anywhere in a rank path.
using Rational = boost::multiprecision::cpp_rational;

// "num/den", always with an explicit denominator ("3/1", "-1/2").
std::string fraction_string(const Rational& r);

// Accepts "num/den" and bare integers.
Rational parse_fraction(const std::string& text);

}  // namespace conjrank
