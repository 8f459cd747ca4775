#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace swl {

using Rational = mpq_class;
using Integer = mpz_class;

/// "3", "-1/2", "0.25" (decimal literals are converted exactly).
Rational parse_rational(std::string_view text);
/// Canonical "a/b" or "a".
std::string to_string(const Rational& q);
int sign_of(const Rational& q);

Integer binomial(long n, long k);

}  // namespace swl
