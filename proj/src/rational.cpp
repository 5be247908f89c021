#include "rqc/rational.hpp"

#include "rqc/error.hpp"

#include <cctype>
#include <charconv>

namespace rqc {

namespace {

long long parse_integer(std::string_view text, std::string_view whole) {
    long long value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw Error("invalid rational: '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw Error("invalid rational: empty string");
    }
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.front() == '-' || den.front() == '+') {
        throw Error("invalid rational: '" + std::string(text) + "'");
    }
    long long d = parse_integer(den, text);
    if (d == 0) {
        throw Error("invalid rational: '" + std::string(text) + "' (zero denominator)");
    }
    return Rational(parse_integer(num, text), d);
}

std::string to_string(const Rational& value) {
    if (value.denominator() == 1) {
        return std::to_string(value.numerator());
    }
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

} // namespace rqc
