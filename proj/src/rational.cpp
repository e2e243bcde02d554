#include "rational.hpp"

namespace svcalc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

std::optional<BigInt> parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        return std::nullopt;
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_integer(text);
        if (!n)
            return std::nullopt;
        return Rational(*n);
    }
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0)
        return std::nullopt;
    return Rational(*num, *den);
}

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

int sign_of(const Rational& r) {
    return r.sign();
}

} // namespace svcalc
