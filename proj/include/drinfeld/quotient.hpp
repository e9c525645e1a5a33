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

#ifndef DRINFELD_QUOTIENT_HPP
#define DRINFELD_QUOTIENT_HPP

#include <string>
#include <vector>

#include "drinfeld/polyx.hpp"

namespace drinfeld {

/// k[X]/(P) for P in A[X] of degree D >= 1; elements are reduced KPolyX of degree < D.
class QuotientAlgebra {
   public:
    using Elem = KPolyX;

    explicit QuotientAlgebra(APolyX modulus);

    const FieldPtr& field() const noexcept { return field_; }
    const APolyX& modulus() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(p_.deg()); }
    Elem reduce(const KPolyX& a) const;
    /// The class of X.
    Elem generator() const;

    Elem zero() const { return KPolyX(); }
    Elem one() const { return KPolyX::constant(RationalFn(APoly::one(field_))); }
    Elem from_fq(Fq c) const { return KPolyX::constant(RationalFn(APoly::constant(field_, c))); }
    Elem from_k(const RationalFn& r) const { return KPolyX::constant(r); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    /// sum c_i^q (X^q)^i using precomputed X^{qi} mod P.
    Elem frobenius(const Elem& a) const;
    bool is_zero(const Elem& a) const noexcept { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return drinfeld::to_string(a); }

    bool operator==(const QuotientAlgebra& o) const { return p_ == o.p_; }

   private:
    APolyX p_;
    FieldPtr field_;
    KPolyX monic_;
    std::vector<KPolyX> x_qi_;
};

}  // namespace drinfeld

#endif
