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

#include "drinfeld/numeric.hpp"

#include <cctype>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw ParseError("empty number", 0);

    auto parse_int = [&](const std::string& part, std::size_t offset) {
        if (part.empty()) throw ParseError("expected digits", offset);
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw ParseError("expected digits", offset + i);
        for (std::size_t j = i; j < part.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(part[j]))) throw ParseError("unexpected character", offset + j);
        return Integer(part[0] == '+' ? part.substr(1) : part);
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_int(s.substr(0, slash), 0);
        Integer den = parse_int(s.substr(slash + 1), slash + 1);
        if (den == 0) throw ParseError("zero denominator", slash + 1);
        return make_rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        Integer w = parse_int(whole, 0);
        if (frac.empty()) return Rational(w);
        Integer f = parse_int(frac, dot + 1);
        Integer scale = ipow(10, frac.size());
        Integer num = abs(w) * scale + f;
        if (negative) num = -num;
        return make_rational(num, scale);
    }
    return Rational(parse_int(s, 0));
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_decimal(const Rational& r, int digits) {
    mpf_class f(r, 256);
    std::ostringstream out;
    out.precision(digits);
    out << f;
    return out.str();
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

long long to_int64(const Integer& n) {
    if (!n.fits_slong_p()) throw ResourceLimitError("integer " + n.get_str() + " exceeds machine range");
    return n.get_si();
}

unsigned long floor_log(const Integer& n, const Integer& base) {
    if (n < 1 || base < 2) throw PreconditionError("floor_log needs n >= 1 and base >= 2");
    unsigned long e = 0;
    Integer acc = base;
    while (acc <= n) {
        acc *= base;
        ++e;
    }
    return e;
}

bool is_probable_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace drinfeld
