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

#ifndef DRINFELD_ALGEBRA_HPP
#define DRINFELD_ALGEBRA_HPP

#include <concepts>
#include <memory>
#include <string>

#include "drinfeld/apoly.hpp"
#include "drinfeld/rational_fn.hpp"

namespace drinfeld {

/// A commutative F_q-algebra with its q-power Frobenius, receiving k where
/// denominators allow.
template <class A>
concept FqAlgebra = requires(const A& alg, const typename A::Elem& x, const RationalFn& r, Fq c) {
    { alg.zero() } -> std::convertible_to<typename A::Elem>;
    { alg.one() } -> std::convertible_to<typename A::Elem>;
    { alg.from_fq(c) } -> std::convertible_to<typename A::Elem>;
    { alg.from_k(r) } -> std::convertible_to<typename A::Elem>;
    { alg.add(x, x) } -> std::convertible_to<typename A::Elem>;
    { alg.sub(x, x) } -> std::convertible_to<typename A::Elem>;
    { alg.neg(x) } -> std::convertible_to<typename A::Elem>;
    { alg.mul(x, x) } -> std::convertible_to<typename A::Elem>;
    { alg.frobenius(x) } -> std::convertible_to<typename A::Elem>;
    { alg.is_zero(x) } -> std::convertible_to<bool>;
    { alg.equal(x, x) } -> std::convertible_to<bool>;
    { alg.to_string(x) } -> std::convertible_to<std::string>;
    { alg.field() } -> std::convertible_to<FieldPtr>;
};

/// The rational function field k itself.
class KField {
   public:
    using Elem = RationalFn;

    explicit KField(FieldPtr field) : field_(std::move(field)) {}

    const FieldPtr& field() const noexcept { return field_; }
    Elem zero() const { return RationalFn(field_); }
    Elem one() const { return RationalFn(APoly::one(field_)); }
    Elem from_fq(Fq c) const { return RationalFn(APoly::constant(field_, c)); }
    Elem from_k(const RationalFn& r) const { return r; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem frobenius(const Elem& a) const { return a.frobenius(); }
    bool is_zero(const Elem& a) const noexcept { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const noexcept { return a == b; }
    std::string to_string(const Elem& a) const { return a.to_string(); }

    bool operator==(const KField& o) const noexcept { return same_field(field_, o.field_); }

   private:
    FieldPtr field_;
};

/// The residue field A/(l) for a monic irreducible l.
class ResidueRing {
   public:
    using Elem = APoly;
    struct TrustedIrreducible {};

    /// Checks that l is monic and irreducible.
    explicit ResidueRing(APoly l);
    ResidueRing(APoly l, TrustedIrreducible) : l_(std::move(l)) {}

    const FieldPtr& field() const noexcept { return l_.field(); }
    const APoly& modulus() const noexcept { return l_; }
    Elem reduce(const APoly& a) const { return a % l_; }

    Elem zero() const { return APoly(field()); }
    Elem one() const { return APoly::one(field()); }
    Elem from_fq(Fq c) const { return APoly::constant(field(), c); }
    /// Throws BadReductionError when l divides the denominator.
    Elem from_k(const RationalFn& r) const;
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % l_; }
    Elem inverse(const Elem& a) const;
    /// a^q by square-and-multiply.
    Elem frobenius(const Elem& a) const;
    bool is_zero(const Elem& a) const noexcept { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const noexcept { return a == b; }
    std::string to_string(const Elem& a) const { return a.to_string(); }

    bool operator==(const ResidueRing& o) const noexcept { return l_ == o.l_; }

   private:
    APoly l_;
};

}  // namespace drinfeld

#endif
