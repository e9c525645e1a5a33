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

#ifndef DRINFELD_RATIONAL_FN_HPP
#define DRINFELD_RATIONAL_FN_HPP

#include <string>

#include "drinfeld/apoly.hpp"

namespace drinfeld {

/// Element of k = F_q(T) as num/den with den monic and gcd(num, den) = 1.
class RationalFn {
   public:
    RationalFn() = default;
    explicit RationalFn(const FieldPtr& field) : num_(field), den_(APoly::one(field)) {}
    RationalFn(const APoly& num);  // NOLINT(google-explicit-constructor)
    RationalFn(APoly num, APoly den);

    const APoly& num() const noexcept { return num_; }
    const APoly& den() const noexcept { return den_; }
    const FieldPtr& field() const noexcept { return num_.field() ? num_.field() : den_.field(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    friend bool operator==(const RationalFn& a, const RationalFn& b) noexcept {
        return a.num_ == b.num_ && (a.num_.is_zero() || a.den_ == b.den_);
    }

    /// Throws PreconditionError on zero.
    RationalFn inverse() const;
    RationalFn frobenius() const;
    RationalFn pow(long long e) const;

    /// Height of [num : den], i.e. max(deg num, deg den).
    long long height() const noexcept;
    /// v_l(num) - v_l(den); throws on zero.
    long long valuation(const APoly& l) const;
    bool is_integral_at(const APoly& l) const;

    std::string to_string() const;

   private:
    void normalize();

    APoly num_;
    APoly den_;
};

}  // namespace drinfeld

#endif
