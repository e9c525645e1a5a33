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

#include "drinfeld/fq.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"
#include "drinfeld/numeric.hpp"

namespace drinfeld {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// remainder of a by monic m over F_p
Coeffs mod_fp(Coeffs a, const Coeffs& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            std::uint64_t sub = (lead * m[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Coeffs decode(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
    Coeffs c(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

std::uint32_t encode(const Coeffs& c, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

bool irreducible_over_fp(const Coeffs& m, std::uint32_t p) {
    const std::size_t deg = m.size() - 1;
    if (deg <= 1) return deg == 1;
    // trial division by every monic polynomial of degree <= deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs f(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                f[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            f[d] = 1;
            if (mod_fp(m, f, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FqField::FqField(std::uint32_t p, Coeffs modulus)
    : p_(p), e_(static_cast<std::uint32_t>(modulus.empty() ? 1 : modulus.size() - 1)), q_(p), modulus_(std::move(modulus)) {
    if (e_ == 1) return;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) q *= p_;
    q_ = static_cast<std::uint32_t>(q);
    log_.assign(q_, 0);
    exp_.assign(q_, 0);
    // search for a generator of the multiplicative group
    for (std::uint32_t g = 2; g < q_; ++g) {
        std::fill(log_.begin(), log_.end(), 0);
        Coeffs gc = decode(g, p_, e_);
        Coeffs cur(1, 1);
        bool ok = true;
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            std::uint32_t v = encode(cur, p_);
            if (k > 0 && v == 1) {
                ok = false;
                break;
            }
            exp_[k] = v;
            log_[v] = k;
            Coeffs next(cur.size() + gc.size(), 0);
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = 0; j < gc.size(); ++j)
                    next[i + j] = static_cast<std::uint32_t>((next[i + j] + static_cast<std::uint64_t>(cur[i]) * gc[j]) % p_);
            cur = mod_fp(next, modulus_, p_);
            if (cur.empty()) cur.push_back(0);
        }
        if (ok) return;
    }
    throw ContractViolation("no multiplicative generator found for F_q");
}

std::shared_ptr<const FqField> FqField::prime(std::uint32_t p) {
    if (!is_probable_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw PreconditionError("characteristic too large");
    return std::shared_ptr<const FqField>(new FqField(p, Coeffs{0, 1}));
}

std::shared_ptr<const FqField> FqField::extension(std::uint32_t p, Coeffs modulus) {
    if (!is_probable_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) {
        if (c >= p) throw PreconditionError("modulus coefficient out of range [0, p)");
    }
    trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) throw PreconditionError("field modulus must be monic of degree >= 1");
    if (modulus.size() == 2) return prime(p);
    if (!irreducible_over_fp(modulus, p)) throw PreconditionError("field modulus is reducible over F_p");
    std::uint64_t q = 1;
    for (std::size_t i = 1; i < modulus.size(); ++i) {
        q *= p;
        if (q > (1u << 16)) throw PreconditionError("extension fields are limited to q <= 65536");
    }
    return std::shared_ptr<const FqField>(new FqField(p, std::move(modulus)));
}

std::shared_ptr<const FqField> FqField::of_order(std::uint64_t q) {
    if (q < 2) throw PreconditionError("q must be a prime power >= 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
    if (e == 1) return prime(static_cast<std::uint32_t>(p));
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coeffs m(e + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < e; ++i) {
            m[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        m[e] = 1;
        if (irreducible_over_fp(m, static_cast<std::uint32_t>(p))) return extension(static_cast<std::uint32_t>(p), m);
    }
    throw ContractViolation("no irreducible modulus found");
}

Fq FqField::add_digits(Fq a, Fq b) const noexcept {
    Fq out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

Fq FqField::neg_digits(Fq a) const noexcept {
    Fq out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return out;
}

Fq FqField::inv(Fq a) const {
    if (a == 0) throw PreconditionError("division by zero in F_q");
    if (e_ == 1) return pow(a, p_ - 2);
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Fq FqField::pow(Fq a, std::uint64_t n) const noexcept {
    Fq result = 1;
    Fq base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

Fq FqField::from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Fq>(r);
}

std::string FqField::to_string(Fq a) const {
    if (e_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    Coeffs c = decode(a, p_, e_);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += "u";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

bool FqField::needs_parens(Fq a) const {
    if (e_ == 1 || a == 0) return false;
    Coeffs c = decode(a, p_, e_);
    return std::count_if(c.begin(), c.end(), [](std::uint32_t x) { return x != 0; }) > 1;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace drinfeld
