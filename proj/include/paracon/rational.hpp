#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace paracon {

// All measures are exact; decimals only appear when rendering.
using Rational = boost::rational<std::int64_t>;

// Accepts "n", "n/d", and finite decimals such as "-0.17" or ".4".
// Throws PreconditionError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "n/d" with the sign on the numerator; integers keep the "/1".
std::string format_fraction(const Rational& value);

// Round-half-even to `precision` fractional digits. Zero never carries a sign.
std::string format_decimal(const Rational& value, int precision);

// -1, 0 or 1.
int sign(const Rational& value);

}  // namespace paracon
