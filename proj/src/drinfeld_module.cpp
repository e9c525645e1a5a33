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

#include "drinfeld/drinfeld_module.hpp"

namespace drinfeld {

namespace {

std::vector<RationalFn> checked(const FieldPtr& field, std::vector<RationalFn> coeffs) {
    if (!field) throw PreconditionError("Drinfeld module without a field");
    if (coeffs.size() < 2) throw PreconditionError("Drinfeld module rank must be >= 1");
    if (!(coeffs[0] == RationalFn(APoly::T(field)))) throw PreconditionError("Drinfeld module must have a_0 = T");
    if (coeffs.back().is_zero()) throw PreconditionError("leading coefficient a_d must be nonzero");
    for (const RationalFn& c : coeffs) {
        if (c.field() && !same_field(c.field(), field)) throw PreconditionError("coefficient over a different field");
    }
    return coeffs;
}

}  // namespace

DrinfeldModule::DrinfeldModule(FieldPtr field, std::vector<RationalFn> coeffs)
    : field_(std::move(field)),
      coeffs_(checked(field_, std::move(coeffs))),
      k_(std::make_shared<const KField>(field_)),
      phi_t_(k_, coeffs_) {}

DrinfeldModule DrinfeldModule::carlitz(const FieldPtr& field) {
    return DrinfeldModule(field, {RationalFn(APoly::T(field)), RationalFn(APoly::one(field))});
}

OrePoly<KField> DrinfeldModule::phi_image(const APoly& a) const {
    OrePoly<KField> result(k_);
    for (std::size_t j = a.size(); j-- > 0;) {
        result = ore_mul(result, phi_t_);
        if (a.coeff(j) != 0) result = result + OrePoly<KField>::constant(k_, k_->from_fq(a.coeff(j)));
    }
    return result;
}

bool DrinfeldModule::good_reduction(const APoly& l) const {
    for (const RationalFn& c : coeffs_)
        if (!c.is_integral_at(l)) return false;
    return coeffs_.back().valuation(l) == 0;
}

std::string DrinfeldModule::to_string() const { return phi_t_.to_string(); }

OrePoly<ResidueRing> ore_reduce_mod(const OrePoly<KField>& f, const APoly& l) {
    auto ring = std::make_shared<const ResidueRing>(l);
    std::vector<APoly> out;
    out.reserve(f.coeffs().size());
    for (const RationalFn& c : f.coeffs()) out.push_back(ring->from_k(c));
    return OrePoly<ResidueRing>(ring, std::move(out));
}

}  // namespace drinfeld
