#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace apg {

using Integer = mpz_class;
using Rational = mpq_class;

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

Integer gcd(const Integer& x, const Integer& y);
Integer lcm(const Integer& x, const Integer& y);

/// gcd of the absolute values; 0 for an all-zero span.
Integer content(std::span<const Integer> v);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Fits in a signed 64-bit integer.
bool fits_int64(const Integer& x);

}  // namespace apg
