#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace rqc {

/// Exact rational arithmetic for all economic quantities. No floating point
/// anywhere in the alignment computations.
using Rational = boost::rational<long long>;

/// Parses "n", "-n" or "n/d" (d a positive integer). Throws Error otherwise.
Rational parse_rational(std::string_view text);

/// Renders as "n" when integral, else "n/d" in lowest terms.
std::string to_string(const Rational& value);

} // namespace rqc
