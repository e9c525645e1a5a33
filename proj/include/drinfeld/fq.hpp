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

#ifndef DRINFELD_FQ_HPP
#define DRINFELD_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace drinfeld {

/// An element of F_q, encoded as sum c_i p^i for the u-polynomial sum c_i u^i.
using Fq = std::uint32_t;

/// The finite field F_q with q = p^e, realized as F_p[u]/(modulus).
///
/// Prime fields use plain modular arithmetic. Proper extensions keep
/// discrete log / antilog tables, so q is capped at 2^16 when e > 1.
class FqField {
   public:
    static std::shared_ptr<const FqField> prime(std::uint32_t p);
    /// `modulus` is monic of degree e over F_p, coefficients low-to-high.
    static std::shared_ptr<const FqField> extension(std::uint32_t p, std::vector<std::uint32_t> modulus);
    /// F_q for a prime power q; extensions get the first monic irreducible modulus in index order.
    static std::shared_ptr<const FqField> of_order(std::uint64_t q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return e_ == 1; }

    Fq add(Fq a, Fq b) const noexcept {
        if (e_ == 1) {
            std::uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return p_ == 2 ? (a ^ b) : add_digits(a, b);
    }
    Fq neg(Fq a) const noexcept {
        if (e_ == 1) return a == 0 ? 0 : p_ - a;
        return p_ == 2 ? a : neg_digits(a);
    }
    Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (e_ == 1) return static_cast<Fq>((static_cast<std::uint64_t>(a) * b) % p_);
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    /// Throws PreconditionError on zero.
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, std::uint64_t n) const noexcept;
    /// Image of an integer in the prime subfield.
    Fq from_int(long long n) const noexcept;

    /// Decimal digit for prime fields, u-polynomial text otherwise.
    std::string to_string(Fq a) const;
    /// True when to_string(a) needs parentheses as a multiplicative factor.
    bool needs_parens(Fq a) const;

    bool operator==(const FqField& other) const noexcept {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

   private:
    FqField(std::uint32_t p, std::vector<std::uint32_t> modulus);
    Fq add_digits(Fq a, Fq b) const noexcept;
    Fq neg_digits(Fq a) const noexcept;

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<Fq> exp_;
};

using FieldPtr = std::shared_ptr<const FqField>;

/// Pointer identity or structural equality.
bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

}  // namespace drinfeld

#endif
