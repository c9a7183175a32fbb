#include "paracon/rational.hpp"

#include <cctype>
#include <limits>

#include "paracon/error.hpp"

namespace paracon {

namespace {

constexpr int kMaxPrecision = 18;

[[noreturn]] void bad_number(std::string_view text, const char* why) {
    throw PreconditionError("invalid number '" + std::string(text) + "': " + why);
}

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty()) bad_number(whole, "missing digits");
    std::int64_t value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) bad_number(whole, "unexpected character");
        if (__builtin_mul_overflow(value, 10, &value) || __builtin_add_overflow(value, c - '0', &value))
            bad_number(whole, "out of range");
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.empty()) bad_number(text, "empty");

    bool negative = false;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_digits(body.substr(0, slash), text);
        std::int64_t den = parse_digits(body.substr(slash + 1), text);
        if (den == 0) bad_number(text, "zero denominator");
        result = Rational(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) bad_number(text, "missing digits");
        if (frac_part.size() > kMaxPrecision) bad_number(text, "too many fractional digits");
        std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
        std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        std::int64_t num = 0;
        if (__builtin_mul_overflow(whole, scale, &num) || __builtin_add_overflow(num, frac, &num))
            bad_number(text, "out of range");
        result = Rational(num, scale);
    } else {
        result = Rational(parse_digits(body, text));
    }
    return negative ? -result : result;
}

std::string format_fraction(const Rational& value) {
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string format_decimal(const Rational& value, int precision) {
    if (precision < 0 || precision > kMaxPrecision)
        throw PreconditionError("decimal precision must be in [0, " + std::to_string(kMaxPrecision) + "]");

    __int128 scale = 1;
    for (int i = 0; i < precision; ++i) scale *= 10;

    const bool negative = value.numerator() < 0;
    __int128 num = value.numerator();
    if (negative) num = -num;
    const __int128 den = value.denominator();

    __int128 scaled = num * scale;
    __int128 quotient = scaled / den;
    const __int128 remainder = scaled % den;
    const __int128 twice = remainder * 2;
    if (twice > den || (twice == den && (quotient % 2) != 0)) ++quotient;

    const __int128 int_part = quotient / scale;
    __int128 frac_part = quotient % scale;

    std::string digits = std::to_string(static_cast<long long>(int_part));
    if (precision > 0) {
        std::string frac(static_cast<std::size_t>(precision), '0');
        for (int i = precision - 1; i >= 0; --i) {
            frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac_part % 10));
            frac_part /= 10;
        }
        digits += "." + frac;
    }
    if (negative && quotient != 0) digits.insert(digits.begin(), '-');
    return digits;
}

int sign(const Rational& value) {
    return (value.numerator() > 0) - (value.numerator() < 0);
}

}  // namespace paracon
