// Copyright 2026 The stabdisj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABDISJ_RATIONAL_H
#define STABDISJ_RATIONAL_H

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stabdisj {

/// Arbitrary-precision fraction, always canonical (lowest terms, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws DimensionError if den == 0.
Rational make_rational(long num, long den = 1);

/// "num/den", including "2/1" for integers.
std::string to_string(const Rational &q);
/// "num/den", or just "num" when the denominator is one.
std::string pretty(const Rational &q);
/// Accepts "num/den" or "num". Throws ParseError on malformed text.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational &q);
Integer floor(const Rational &q);
Integer ceil(const Rational &q);
Integer lcm(const Integer &a, const Integer &b);
Integer gcd(const Integer &a, const Integer &b);

/// Clamps to a long; throws TooLarge if the value does not fit.
long to_long(const Integer &z);

}  // namespace stabdisj

#endif
