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

#ifndef DRINFELD_POLYX_HPP
#define DRINFELD_POLYX_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/apoly.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/rational_fn.hpp"

namespace drinfeld {

/// Dense univariate polynomial over a commutative coefficient ring C.
template <class C>
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(C c) { return UPoly(std::vector<C>{std::move(c)}); }
    static UPoly monomial(C c, std::size_t k) {
        std::vector<C> v(k + 1);
        v[k] = std::move(c);
        return UPoly(std::move(v));
    }

    const std::vector<C>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_zero() const noexcept { return c_.empty(); }
    long long deg() const noexcept { return static_cast<long long>(c_.size()) - 1; }
    Degree degree() const noexcept { return c_.empty() ? Degree() : Degree(deg()); }
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(); }
    const C& leading() const { return c_.back(); }

    UPoly operator-() const {
        UPoly out = *this;
        for (C& c : out.c_) c = -c;
        return out;
    }
    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<C> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return UPoly(std::move(out));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly scaled(const C& s) const {
        if (s.is_zero()) return UPoly();
        std::vector<C> out;
        out.reserve(c_.size());
        for (const C& c : c_) out.push_back(c * s);
        return UPoly(std::move(out));
    }
    /// Multiplication by X^k.
    UPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<C> out(k);
        out.insert(out.end(), c_.begin(), c_.end());
        return UPoly(std::move(out));
    }
    C eval(const C& x) const {
        C acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    /// Formal derivative.
    UPoly derivative(const FieldPtr& field) const;

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<C> c_;
};

/// Polynomials in X over A and over k.
using APolyX = UPoly<APoly>;
using KPolyX = UPoly<RationalFn>;
/// Polynomials in an auxiliary variable Y over A[X].
using APolyXY = UPoly<APolyX>;

/// Field of any coefficient; nullptr for the zero polynomial.
FieldPtr field_of(const APolyX& a);
FieldPtr field_of(const KPolyX& a);

inline APoly scale_fq(const APoly& a, Fq c) { return a.scaled(c); }
inline RationalFn scale_fq(const RationalFn& a, Fq c) {
    if (a.is_zero() || c == 1) return a;
    return a * RationalFn(APoly::constant(a.field(), c));
}
template <class C>
UPoly<C> scale_fq(const UPoly<C>& a, Fq c) {
    std::vector<C> out;
    out.reserve(a.size());
    for (const C& x : a.coeffs()) out.push_back(scale_fq(x, c));
    return UPoly<C>(std::move(out));
}

template <class C>
UPoly<C> UPoly<C>::derivative(const FieldPtr& field) const {
    if (c_.size() <= 1) return UPoly();
    std::vector<C> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = scale_fq(c_[i], field->from_int(static_cast<long long>(i)));
    return UPoly(std::move(out));
}

template <class C>
UPoly<C> pow(const UPoly<C>& base, unsigned long e) {
    UPoly<C> result = UPoly<C>::constant(C(APoly::one(field_of(base))));
    UPoly<C> b = base;
    while (e > 0) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

inline std::optional<APoly> try_exact_div(const APoly& a, const APoly& b) { return APoly::try_exact_div(a, b); }

/// a / b when the quotient has coefficients in the same ring.
template <class C>
std::optional<UPoly<C>> try_exact_div(const UPoly<C>& a, const UPoly<C>& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (a.is_zero()) return UPoly<C>();
    if (a.size() < b.size()) return std::nullopt;
    std::vector<C> r = a.coeffs();
    std::vector<C> quo(a.size() - b.size() + 1);
    const std::size_t db = b.size() - 1;
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        auto c = try_exact_div(r[k], b.leading());
        if (!c) return std::nullopt;
        for (std::size_t j = 0; j <= db; ++j) {
            if (!b.coeffs()[j].is_zero()) r[k - db + j] = r[k - db + j] - *c * b.coeffs()[j];
        }
        quo[k - db] = std::move(*c);
    }
    for (std::size_t k = 0; k < db; ++k)
        if (!r[k].is_zero()) return std::nullopt;
    return UPoly<C>(std::move(quo));
}

template <class C>
UPoly<C> exact_div(const UPoly<C>& a, const UPoly<C>& b) {
    auto quo = try_exact_div(a, b);
    if (!quo) throw ContractViolation("inexact polynomial division");
    return *quo;
}

/// Monic gcd of the coefficients.
APoly content(const APolyX& a);
APolyX divide_coefficients(const APolyX& a, const APoly& c);
/// Content removed and leading coefficient's leading F_q-coefficient scaled to 1.
APolyX primitive_normalize(const APolyX& a);
/// Max T-degree over the coefficients; -1 for zero.
long long max_t_degree(const APolyX& a);

KPolyX to_k(const APolyX& a);
/// (delta * a, delta) with delta the monic lcm of the denominators.
std::pair<APolyX, APoly> clear_denominators(const KPolyX& a);
std::pair<KPolyX, KPolyX> divmod(const KPolyX& a, const KPolyX& b);

std::string to_string(const APolyX& a, const std::string& var = "X");
std::string to_string(const KPolyX& a, const std::string& var = "X");

}  // namespace drinfeld

#endif
