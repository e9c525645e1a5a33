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

#ifndef DRINFELD_ORE_HPP
#define DRINFELD_ORE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/algebra.hpp"
#include "drinfeld/errors.hpp"

namespace drinfeld {

/// Twisted polynomial sum c_i tau^i over a coefficient algebra, with tau*c = c^q*tau.
template <FqAlgebra Alg>
class OrePoly {
   public:
    using Elem = typename Alg::Elem;

    explicit OrePoly(std::shared_ptr<const Alg> alg, std::vector<Elem> coeffs = {})
        : alg_(std::move(alg)), c_(std::move(coeffs)) {
        trim();
    }

    static OrePoly constant(std::shared_ptr<const Alg> alg, Elem c) {
        std::vector<Elem> v{std::move(c)};
        return OrePoly(std::move(alg), std::move(v));
    }
    /// c*tau^k.
    static OrePoly monomial(std::shared_ptr<const Alg> alg, Elem c, std::size_t k) {
        std::vector<Elem> v(k + 1, alg->zero());
        v[k] = std::move(c);
        return OrePoly(std::move(alg), std::move(v));
    }

    const Alg& algebra() const noexcept { return *alg_; }
    const std::shared_ptr<const Alg>& algebra_ptr() const noexcept { return alg_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    long long deg() const noexcept { return static_cast<long long>(c_.size()) - 1; }
    Degree degree() const noexcept { return c_.empty() ? Degree() : Degree(deg()); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : alg_->zero(); }

    friend OrePoly operator+(const OrePoly& a, const OrePoly& b) {
        check_same(a, b);
        std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.alg_->zero());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.alg_->add(a.coeff(i), b.coeff(i));
        return OrePoly(a.alg_, std::move(v));
    }
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b) {
        check_same(a, b);
        std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.alg_->zero());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.alg_->sub(a.coeff(i), b.coeff(i));
        return OrePoly(a.alg_, std::move(v));
    }
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b) { return ore_mul(a, b); }
    friend bool operator==(const OrePoly& a, const OrePoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.alg_->equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

    /// Left multiplication by a scalar of the algebra.
    OrePoly scaled(const Elem& s) const {
        std::vector<Elem> v;
        v.reserve(c_.size());
        for (const Elem& c : c_) v.push_back(alg_->mul(s, c));
        return OrePoly(alg_, std::move(v));
    }

    /// (f*g)_{i+j} = sum f_i * g_j^{q^i}.
    friend OrePoly ore_mul(const OrePoly& f, const OrePoly& g) {
        check_same(f, g);
        const Alg& alg = *f.alg_;
        if (f.is_zero() || g.is_zero()) return OrePoly(f.alg_);
        std::vector<Elem> out(f.c_.size() + g.c_.size() - 1, alg.zero());
        std::vector<Elem> twisted = g.c_;
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (i > 0)
                for (Elem& t : twisted) t = alg.frobenius(t);
            if (alg.is_zero(f.c_[i])) continue;
            for (std::size_t j = 0; j < twisted.size(); ++j)
                out[i + j] = alg.add(out[i + j], alg.mul(f.c_[i], twisted[j]));
        }
        return OrePoly(f.alg_, std::move(out));
    }

    /// sum c_i * xi^{q^i}.
    Elem apply(const Elem& xi) const {
        Elem acc = alg_->zero();
        Elem power = xi;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i > 0) power = alg_->frobenius(power);
            if (!alg_->is_zero(c_[i])) acc = alg_->add(acc, alg_->mul(c_[i], power));
        }
        return acc;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (alg_->is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            std::string cs = alg_->to_string(c_[i]);
            if (i == 0) {
                out += cs;
                continue;
            }
            if (!alg_->equal(c_[i], alg_->one())) out += "(" + cs + ")*";
            out += "tau";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

   private:
    static void check_same(const OrePoly& a, const OrePoly& b) {
        if (a.alg_ != b.alg_ && !(*a.alg_ == *b.alg_)) throw PreconditionError("Ore polynomials over different coefficient algebras");
    }
    void trim() {
        while (!c_.empty() && alg_->is_zero(c_.back())) c_.pop_back();
    }

    std::shared_ptr<const Alg> alg_;
    std::vector<Elem> c_;
};

}  // namespace drinfeld

#endif
