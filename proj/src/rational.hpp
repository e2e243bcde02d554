#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace svcalc {

// Exact rational arithmetic; cpp_rational keeps gcd-reduced form with positive
// denominator, which is the canonical form everywhere in this library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p" or "p/q" with optional sign, q != 0. Returns nothing on junk.
std::optional<Rational> parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string rational_str(const Rational& r);

int sign_of(const Rational& r);

} // namespace svcalc
