#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace graphcap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q omitted when 1; the inverse accepts both forms.
std::string to_fraction_string(const Rational& r);
Rational rational_from_string(const std::string& s);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

}  // namespace graphcap
