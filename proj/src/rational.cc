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

#include "stabdisj/rational.h"

#include <string>

#include "stabdisj/errors.h"

namespace stabdisj {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw DimensionError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string pretty(const Rational &q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return to_string(q);
}

namespace {

bool valid_integer(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); i++) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num)) {
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    }
    if (!valid_integer(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed rational '" + std::string(text) + "'", slash);
    }
    std::string n(num[0] == '+' ? num.substr(1) : num);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'", slash);
    }
    Rational q(Integer(n, 10), d);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational &q) {
    return q.get_den() == 1;
}

Integer floor(const Rational &q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational &q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer lcm(const Integer &a, const Integer &b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer &a, const Integer &b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long to_long(const Integer &z) {
    if (!z.fits_slong_p()) {
        throw TooLarge("integer " + z.get_str() + " does not fit in a machine word");
    }
    return z.get_si();
}

}  // namespace stabdisj
