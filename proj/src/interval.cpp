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

#include "drinfeld/interval.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

Integer shift_floor(const Integer& a, unsigned long bits) {
    Integer out;
    mpz_fdiv_q_2exp(out.get_mpz_t(), a.get_mpz_t(), bits);
    return out;
}

Integer shift_ceil(const Integer& a, unsigned long bits) {
    Integer out;
    mpz_cdiv_q_2exp(out.get_mpz_t(), a.get_mpz_t(), bits);
    return out;
}

Integer pow2(unsigned long bits) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, bits);
    return out;
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (a.lo <= 0 || b.lo <= 0) throw PreconditionError("interval division needs positive endpoints");
    return {a.lo / b.hi, a.hi / b.lo};
}

Interval max(const Interval& a, const Rational& v) { return {a.lo < v ? v : a.lo, a.hi < v ? v : a.hi}; }

Interval min(const Interval& a, const Interval& b) { return {a.lo < b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi}; }

Interval log_q_bracket(const Rational& x, std::uint64_t q, unsigned bits) {
    if (x <= 0) throw PreconditionError("log of a nonpositive number");
    if (q < 2) throw PreconditionError("log base must be >= 2");
    const Integer qz(static_cast<unsigned long>(q));
    // integer part k with q^k <= x < q^{k+1}
    long k = static_cast<long>(floor_log(x.get_num(), qz)) - static_cast<long>(floor_log(x.get_den(), qz)) - 1;
    auto scaled = [&](long e) {
        return e >= 0 ? Rational(x / Rational(ipow(qz, static_cast<unsigned long>(e)))) : Rational(x * Rational(ipow(qz, static_cast<unsigned long>(-e))));
    };
    Rational y = scaled(k);
    while (y >= qz) y = scaled(++k);
    while (y < 1) y = scaled(--k);
    if (y == 1) return Interval::point(Rational(k));
    const unsigned long prec = bits + 64;
    const Integer one_fixed = pow2(prec);
    const Integer q_fixed = qz * one_fixed;
    Integer lo = floor(y * Rational(one_fixed));
    Integer hi = ceil(y * Rational(one_fixed));
    Integer frac = 0;
    unsigned m = 0;
    for (; m < bits; ++m) {
        lo = shift_floor(lo * lo, prec);
        hi = shift_ceil(hi * hi, prec);
        int bit;
        if (lo >= q_fixed) {
            bit = 1;
            mpz_fdiv_q(lo.get_mpz_t(), lo.get_mpz_t(), qz.get_mpz_t());
            mpz_cdiv_q(hi.get_mpz_t(), hi.get_mpz_t(), qz.get_mpz_t());
        } else if (hi < q_fixed) {
            bit = 0;
        } else {
            break;
        }
        frac = 2 * frac + bit;
    }
    Rational base(k);
    Rational scale(Integer(1), pow2(m));
    return {base + Rational(frac) * scale, base + Rational(frac + 1) * scale};
}

Interval log_q_bracket(const Interval& x, std::uint64_t q, unsigned bits) {
    if (x.is_exact()) return log_q_bracket(x.lo, q, bits);
    return {log_q_bracket(x.lo, q, bits).lo, log_q_bracket(x.hi, q, bits).hi};
}

Interval q_power_bracket(std::uint64_t q, const Rational& e, unsigned bits) {
    const Integer qz(static_cast<unsigned long>(q));
    const Integer a = e.get_num();
    const unsigned long b = e.get_den().get_ui();
    const unsigned long abs_a = mpz_get_ui(Integer(abs(a)).get_mpz_t());
    Integer qa = ipow(qz, abs_a);
    Interval v;
    if (b == 1) {
        v = Interval::point(Rational(qa));
    } else {
        // floor((q^|a| 2^{b bits})^{1/b}) / 2^bits <= q^{|a|/b} <= (that + 1) / 2^bits
        Integer big = qa * pow2(static_cast<unsigned long>(bits) * b);
        Integer root;
        mpz_root(root.get_mpz_t(), big.get_mpz_t(), b);
        Rational scale(Integer(1), pow2(bits));
        v = {Rational(root) * scale, Rational(root + 1) * scale};
        v.lo.canonicalize();
        v.hi.canonicalize();
    }
    if (a >= 0) return v;
    return {1 / v.hi, 1 / v.lo};
}

std::optional<Integer> common_floor(const Interval& a) {
    Integer f_lo = floor(a.lo);
    if (f_lo != floor(a.hi)) return std::nullopt;
    return f_lo;
}

std::string to_string(const Interval& a) {
    if (a.is_exact()) return to_string(a.lo);
    return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]";
}

}  // namespace drinfeld
