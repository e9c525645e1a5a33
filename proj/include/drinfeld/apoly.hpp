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

#ifndef DRINFELD_APOLY_HPP
#define DRINFELD_APOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/degree.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/numeric.hpp"

namespace drinfeld {

/// Element of A = F_q[T], dense coefficients low to high, no trailing zeros.
///
/// A default-constructed APoly is a field-less zero; it adopts the field of
/// whatever it is combined with.
class APoly {
   public:
    APoly() = default;
    explicit APoly(FieldPtr field) : field_(std::move(field)) {}
    APoly(FieldPtr field, std::vector<Fq> coeffs);

    static APoly constant(const FieldPtr& field, Fq c);
    static APoly monomial(const FieldPtr& field, Fq c, std::size_t k);
    static APoly T(const FieldPtr& field) { return monomial(field, 1, 1); }
    static APoly one(const FieldPtr& field) { return constant(field, 1); }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Fq>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    Degree degree() const noexcept { return c_.empty() ? Degree() : Degree(static_cast<long long>(c_.size()) - 1); }
    /// Degree as an integer, -1 for zero.
    long long deg() const noexcept { return static_cast<long long>(c_.size()) - 1; }

    Fq coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Fq leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    APoly monic() const;
    APoly scaled(Fq c) const;
    /// Multiplication by T^k.
    APoly shifted(std::size_t k) const;
    /// T -> T^k substitution.
    APoly inflate(std::size_t k) const;
    /// a(T)^q; coefficients of F_q are fixed by the q-power map.
    APoly frobenius() const;
    APoly derivative() const;
    Fq eval(Fq t) const;

    APoly operator-() const;
    APoly& operator+=(const APoly& o);
    APoly& operator-=(const APoly& o);
    APoly& operator*=(const APoly& o);
    friend APoly operator+(APoly a, const APoly& b) { return a += b; }
    friend APoly operator-(APoly a, const APoly& b) { return a -= b; }
    friend APoly operator*(const APoly& a, const APoly& b);
    friend bool operator==(const APoly& a, const APoly& b) noexcept { return a.c_ == b.c_; }

    /// Throws PreconditionError when b is zero.
    static std::pair<APoly, APoly> divmod(const APoly& a, const APoly& b);
    friend APoly operator%(const APoly& a, const APoly& b) { return divmod(a, b).second; }
    /// Monic gcd; gcd(0, 0) = 0.
    static APoly gcd(const APoly& a, const APoly& b);
    /// g = s*a + t*b with g monic gcd.
    struct Xgcd;
    static Xgcd xgcd(const APoly& a, const APoly& b);
    static APoly powmod(const APoly& base, const Integer& exponent, const APoly& modulus);
    static APoly pow(const APoly& base, unsigned long exponent);

    /// a / b when b divides a, std::nullopt otherwise.
    static std::optional<APoly> try_exact_div(const APoly& a, const APoly& b);
    /// Throws ContractViolation when b does not divide a.
    static APoly exact_div(const APoly& a, const APoly& b);

    /// Largest m with l^m | a; a nonzero, l nonconstant.
    static long long valuation(const APoly& a, const APoly& l);

    /// Lexicographic comparison of the low-to-high coefficient vectors, shorter first.
    static bool lex_less(const APoly& a, const APoly& b) noexcept;

    std::string to_string(const std::string& var = "T") const;

   private:
    void trim() noexcept;
    void adopt(const APoly& o);

    FieldPtr field_;
    std::vector<Fq> c_;
};

struct APoly::Xgcd {
    APoly g, s, t;
};

/// Rabin's test; unit factors are ignored. Throws on zero.
bool is_irreducible(const APoly& f);

/// All monic irreducibles of degree n in lexicographic order.
std::vector<APoly> enumerate_irreducibles(const FieldPtr& field, unsigned n);

/// (1/n) sum_{d | n} mu(n/d) q^d.
Integer count_irreducibles(std::uint64_t q, unsigned n);

int moebius(unsigned long n);

}  // namespace drinfeld

#endif
