/*
   Copyright 2026 The drinfeld-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DRINFELD_NUMERIC_HPP
#define DRINFELD_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace drinfeld {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "3", "-7/2" or a terminating decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// Exact rendering: "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Decimal rendering with `digits` significant digits (truncated, for display only).
std::string to_decimal(const Rational& r, int digits = 12);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Integer ipow(const Integer& base, unsigned long exponent);

/// Converts to a machine integer; throws ResourceLimitError if it does not fit.
long long to_int64(const Integer& n);

/// The largest e with base^e <= n, for n >= 1 and base >= 2.
unsigned long floor_log(const Integer& n, const Integer& base);

bool is_probable_prime(unsigned long n);

}  // namespace drinfeld

#endif
