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

#ifndef DRINFELD_INTERVAL_HPP
#define DRINFELD_INTERVAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "drinfeld/numeric.hpp"

namespace drinfeld {

/// Closed rational interval [lo, hi]; operations round outward by construction.
struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& v) { return {v, v}; }
    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }

    friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend Interval operator*(const Rational& s, const Interval& a) {
        if (s >= 0) return {s * a.lo, s * a.hi};
        return {s * a.hi, s * a.lo};
    }
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Both endpoints of a and b positive.
    friend Interval operator/(const Interval& a, const Interval& b);
};

Interval max(const Interval& a, const Rational& v);
Interval min(const Interval& a, const Interval& b);

/// Rigorous bracket of log_q(x), x > 0, of width <= 2^-bits; exact when x is an integral power of q.
Interval log_q_bracket(const Rational& x, std::uint64_t q, unsigned bits = 96);
/// Bracket of log_q over an interval of positive values.
Interval log_q_bracket(const Interval& x, std::uint64_t q, unsigned bits = 96);
/// Bracket of q^e for rational e.
Interval q_power_bracket(std::uint64_t q, const Rational& e, unsigned bits = 96);

/// floor of every point of the interval when they all agree.
std::optional<Integer> common_floor(const Interval& a);

std::string to_string(const Interval& a);

}  // namespace drinfeld

#endif
