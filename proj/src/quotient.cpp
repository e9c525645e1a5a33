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

#include "drinfeld/quotient.hpp"

namespace drinfeld {

QuotientAlgebra::QuotientAlgebra(APolyX modulus) : p_(std::move(modulus)) {
    if (p_.deg() < 1) throw PreconditionError("quotient modulus must have positive X-degree");
    field_ = field_of(p_);
    const RationalFn inv_lead = RationalFn(p_.leading()).inverse();
    monic_ = to_k(p_).scaled(inv_lead);
    const std::size_t d = dimension();
    const std::size_t q = field_->q();
    KPolyX xq = reduce(KPolyX::monomial(RationalFn(APoly::one(field_)), q));
    x_qi_.reserve(d);
    x_qi_.push_back(one());
    for (std::size_t i = 1; i < d; ++i) x_qi_.push_back(mul(x_qi_.back(), xq));
}

QuotientAlgebra::Elem QuotientAlgebra::reduce(const KPolyX& a) const {
    if (a.size() <= dimension()) return a;
    // monic divisor: no inversions needed
    std::vector<RationalFn> r = a.coeffs();
    const std::size_t d = dimension();
    for (std::size_t k = r.size(); k-- > d;) {
        if (r[k].is_zero()) continue;
        const RationalFn c = r[k];
        for (std::size_t j = 0; j < d; ++j) {
            const RationalFn& m = monic_.coeffs()[j];
            if (!m.is_zero()) r[k - d + j] -= c * m;
        }
        r[k] = RationalFn();
    }
    r.resize(d);
    return KPolyX(std::move(r));
}

QuotientAlgebra::Elem QuotientAlgebra::generator() const { return reduce(KPolyX::monomial(RationalFn(APoly::one(field_)), 1)); }

QuotientAlgebra::Elem QuotientAlgebra::frobenius(const Elem& a) const {
    KPolyX out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const RationalFn& c = a.coeffs()[i];
        if (c.is_zero()) continue;
        out += x_qi_[i].scaled(c.frobenius());
    }
    return out;
}

}  // namespace drinfeld
