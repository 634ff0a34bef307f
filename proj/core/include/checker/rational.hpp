#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace checker {

using Rational = mpq_class;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);
/// Accepts "a/b", "a", or "-a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);
inline double to_double(const Rational& r) { return r.get_d(); }

Rational factorial(std::uint64_t k);
/// k! / (k - j)!
Rational falling_factorial(std::uint64_t k, std::uint64_t j);
Rational binomial(std::uint64_t k, std::uint64_t j);

}  // namespace checker
