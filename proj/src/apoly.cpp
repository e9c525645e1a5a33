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

#include "drinfeld/apoly.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

const FieldPtr& common_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_field(a, b)) throw PreconditionError("polynomials over different fields");
    return a;
}

}  // namespace

APoly::APoly(FieldPtr field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw PreconditionError("polynomial without a field");
    for (Fq x : c_) {
        if (x >= field_->q()) throw PreconditionError("coefficient outside F_q");
    }
    trim();
}

APoly APoly::constant(const FieldPtr& field, Fq c) { return APoly(field, std::vector<Fq>{c}); }

APoly APoly::monomial(const FieldPtr& field, Fq c, std::size_t k) {
    std::vector<Fq> v(k + 1, 0);
    v[k] = c;
    return APoly(field, std::move(v));
}

void APoly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void APoly::adopt(const APoly& o) { field_ = common_field(field_, o.field_); }

APoly APoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

APoly APoly::scaled(Fq c) const {
    if (c == 0 || is_zero()) return APoly(field_);
    APoly out = *this;
    for (Fq& x : out.c_) x = field_->mul(x, c);
    return out;
}

APoly APoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    APoly out(field_);
    out.c_.assign(k, 0);
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

APoly APoly::inflate(std::size_t k) const {
    if (is_zero() || k == 1) return *this;
    if (k == 0) {
        Fq s = 0;
        for (Fq x : c_) s = field_->add(s, x);
        return APoly(field_, {s});
    }
    APoly out(field_);
    out.c_.assign((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * k] = c_[i];
    return out;
}

APoly APoly::frobenius() const { return field_ ? inflate(field_->q()) : *this; }

APoly APoly::derivative() const {
    if (c_.size() <= 1) return APoly(field_);
    APoly out(field_);
    out.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<long long>(i)));
    out.trim();
    return out;
}

Fq APoly::eval(Fq t) const {
    Fq acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, t), c_[i]);
    return acc;
}

APoly APoly::operator-() const {
    APoly out = *this;
    for (Fq& x : out.c_) x = field_->neg(x);
    return out;
}

APoly& APoly::operator+=(const APoly& o) {
    adopt(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

APoly& APoly::operator-=(const APoly& o) {
    adopt(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

APoly& APoly::operator*=(const APoly& o) { return *this = *this * o; }

APoly operator*(const APoly& a, const APoly& b) {
    const FieldPtr& f = common_field(a.field_, b.field_);
    APoly out(f);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    if (f->is_prime_field() && f->p() < (1u << 16)) {
        // accumulate in 64 bits and reduce once per slot
        const std::uint64_t p = f->p();
        const std::uint64_t limit = ~std::uint64_t{0} - (p - 1) * (p - 1);
        std::vector<std::uint64_t> acc(out.c_.size(), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                std::uint64_t& slot = acc[i + j];
                slot += static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
                if (slot >= limit) slot %= p;
            }
        }
        for (std::size_t k = 0; k < acc.size(); ++k) out.c_[k] = static_cast<Fq>(acc[k] % p);
    } else {
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out.c_[i + j] = f->add(out.c_[i + j], f->mul(a.c_[i], b.c_[j]));
        }
    }
    out.trim();
    return out;
}

std::pair<APoly, APoly> APoly::divmod(const APoly& a, const APoly& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    const FieldPtr& f = common_field(a.field_, b.field_);
    APoly r = a;
    r.field_ = f;
    APoly quo(f);
    if (r.c_.size() < b.c_.size()) return {quo, r};
    quo.c_.assign(r.c_.size() - b.c_.size() + 1, 0);
    const Fq inv_lead = f->inv(b.leading());
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = r.c_.size(); k-- > db;) {
        Fq c = r.c_[k];
        if (c == 0) continue;
        Fq factor = f->mul(c, inv_lead);
        quo.c_[k - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) r.c_[k - db + j] = f->sub(r.c_[k - db + j], f->mul(factor, b.c_[j]));
    }
    r.trim();
    quo.trim();
    return {quo, r};
}

APoly APoly::gcd(const APoly& a, const APoly& b) {
    APoly x = a, y = b;
    while (!y.is_zero()) {
        APoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

APoly::Xgcd APoly::xgcd(const APoly& a, const APoly& b) {
    const FieldPtr& f = common_field(a.field_, b.field_);
    APoly r0 = a, r1 = b;
    APoly s0 = one(f), s1(f), t0(f), t1 = one(f);
    while (!r1.is_zero()) {
        auto [quo, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        APoly s2 = s0 - quo * s1;
        APoly t2 = t0 - quo * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Fq inv = f->inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

APoly APoly::powmod(const APoly& base, const Integer& exponent, const APoly& modulus) {
    if (exponent < 0) throw PreconditionError("negative exponent");
    const FieldPtr& f = common_field(base.field_, modulus.field_);
    APoly result = one(f) % modulus;
    APoly b = base % modulus;
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
    }
    return result;
}

APoly APoly::pow(const APoly& base, unsigned long exponent) {
    APoly result = one(base.field_);
    APoly b = base;
    while (exponent > 0) {
        if (exponent & 1) result = result * b;
        exponent >>= 1;
        if (exponent) b = b * b;
    }
    return result;
}

std::optional<APoly> APoly::try_exact_div(const APoly& a, const APoly& b) {
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) return std::nullopt;
    return quo;
}

APoly APoly::exact_div(const APoly& a, const APoly& b) {
    auto quo = try_exact_div(a, b);
    if (!quo) throw ContractViolation("inexact polynomial division");
    return *quo;
}

long long APoly::valuation(const APoly& a, const APoly& l) {
    if (a.is_zero()) throw PreconditionError("valuation of zero");
    if (l.is_constant()) throw PreconditionError("valuation at a constant");
    long long m = 0;
    APoly cur = a;
    while (true) {
        auto [quo, rem] = divmod(cur, l);
        if (!rem.is_zero()) return m;
        cur = std::move(quo);
        ++m;
    }
}

bool APoly::lex_less(const APoly& a, const APoly& b) noexcept {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string APoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        Fq c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = field_->to_string(c);
        if (field_->needs_parens(c) && i > 0) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c != 1) out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

bool is_irreducible(const APoly& f) {
    if (f.is_zero()) throw PreconditionError("irreducibility of the zero polynomial");
    if (f.deg() < 1) return false;
    if (f.deg() == 1) return true;
    const APoly g = f.monic();
    const auto n = static_cast<unsigned long>(g.deg());
    const FieldPtr& field = g.field();
    const Integer q = field->q();
    const APoly t = APoly::T(field);
    // powers[i] = T^{q^i} mod g
    std::vector<APoly> powers{t % g};
    for (unsigned long i = 1; i <= n; ++i) powers.push_back(APoly::powmod(powers.back(), q, g));
    if (!(powers[n] == t % g)) return false;
    unsigned long m = n;
    for (unsigned long r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        APoly h = powers[n / r] - t;
        if (!APoly::gcd(h, g).is_one()) return false;
    }
    return true;
}

std::vector<APoly> enumerate_irreducibles(const FieldPtr& field, unsigned n) {
    if (n == 0) throw PreconditionError("degree must be >= 1");
    const std::uint64_t q = field->q();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        total *= q;
        if (total > (std::uint64_t{1} << 30)) throw ResourceLimitError("irreducible enumeration exceeds 2^30 candidates");
    }
    std::vector<APoly> out;
    std::vector<Fq> c(n + 1, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        // c_0 is the most significant digit so numeric order is lexicographic
        std::uint64_t v = idx;
        for (unsigned i = n; i-- > 0;) {
            c[i] = static_cast<Fq>(v % q);
            v /= q;
        }
        c[n] = 1;
        if (n > 1 && c[0] == 0) continue;
        APoly f(field, c);
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

int moebius(unsigned long n) {
    int sign = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

Integer count_irreducibles(std::uint64_t q, unsigned n) {
    if (n == 0) throw PreconditionError("degree must be >= 1");
    Integer sum = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(n / d);
        if (mu != 0) sum += mu * ipow(Integer(static_cast<unsigned long>(q)), d);
    }
    return sum / n;
}

}  // namespace drinfeld
