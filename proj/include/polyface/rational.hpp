#ifndef POLYFACE_RATIONAL_HPP
#define POLYFACE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace polyface {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Comparison tolerance for derived floating-point (entropy) quantities, in nats.
inline constexpr double kTol = 1e-9;

// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

}  // namespace polyface

#endif
