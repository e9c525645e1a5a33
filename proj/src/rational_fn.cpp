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

#include "drinfeld/rational_fn.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

RationalFn::RationalFn(const APoly& num) : num_(num), den_(APoly::one(num.field())) {}

RationalFn::RationalFn(APoly num, APoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PreconditionError("zero denominator");
    normalize();
}

void RationalFn::normalize() {
    const FieldPtr& f = field();
    if (num_.is_zero()) {
        num_ = APoly(f);
        den_ = APoly::one(f);
        return;
    }
    if (!den_.is_one()) {
        APoly g = APoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = APoly::exact_div(num_, g);
            den_ = APoly::exact_div(den_, g);
        }
        Fq lead = den_.leading();
        if (lead != 1) {
            Fq inv = f->inv(lead);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.num_ = -num_;
    return out;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.den_.is_one() && b.den_.is_one()) return RationalFn(a.num_ * b.num_);
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero in k");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::frobenius() const {
    RationalFn out = *this;
    out.num_ = num_.frobenius();
    out.den_ = den_.frobenius();
    return out;
}

RationalFn RationalFn::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFn out = *this;
    out.num_ = APoly::pow(num_, static_cast<unsigned long>(e));
    out.den_ = APoly::pow(den_, static_cast<unsigned long>(e));
    return out;
}

long long RationalFn::height() const noexcept { return std::max<long long>({0, num_.deg(), den_.deg()}); }

long long RationalFn::valuation(const APoly& l) const {
    if (is_zero()) throw PreconditionError("valuation of zero");
    return APoly::valuation(num_, l) - APoly::valuation(den_, l);
}

bool RationalFn::is_integral_at(const APoly& l) const { return is_zero() || APoly::valuation(den_, l) == 0; }

std::string RationalFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace drinfeld
