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

#ifndef DRINFELD_DRINFELD_MODULE_HPP
#define DRINFELD_DRINFELD_MODULE_HPP

#include <memory>
#include <string>
#include <vector>

#include "drinfeld/algebra.hpp"
#include "drinfeld/ore.hpp"

namespace drinfeld {

/// Phi(T) = a_0 + a_1 tau + ... + a_d tau^d with a_0 = T and a_d != 0.
class DrinfeldModule {
   public:
    DrinfeldModule(FieldPtr field, std::vector<RationalFn> coeffs);

    static DrinfeldModule carlitz(const FieldPtr& field);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_->q(); }
    unsigned rank() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<RationalFn>& coeffs() const noexcept { return coeffs_; }
    const std::shared_ptr<const KField>& k() const noexcept { return k_; }

    const OrePoly<KField>& phi_T() const noexcept { return phi_t_; }
    /// Horner evaluation of a(Phi(T)) in k{tau}.
    OrePoly<KField> phi_image(const APoly& a) const;

    /// Phi(a) with coefficients mapped into alg, by Horner in alg{tau}.
    template <FqAlgebra Alg>
    OrePoly<Alg> phi_image_in(const std::shared_ptr<const Alg>& alg, const APoly& a) const {
        OrePoly<Alg> phi_t = map_coefficients(alg);
        OrePoly<Alg> result(alg);
        for (std::size_t j = a.size(); j-- > 0;) {
            result = ore_mul(result, phi_t);
            if (a.coeff(j) != 0) result = result + OrePoly<Alg>::constant(alg, alg->from_fq(a.coeff(j)));
        }
        return result;
    }

    /// Phi(a)(xi) by iterating the action of Phi(T) on xi.
    template <FqAlgebra Alg>
    typename Alg::Elem phi_apply(const Alg& alg, const APoly& a, const typename Alg::Elem& xi) const {
        std::vector<typename Alg::Elem> mapped;
        mapped.reserve(coeffs_.size());
        for (const RationalFn& c : coeffs_) mapped.push_back(alg.from_k(c));
        auto act = [&](const typename Alg::Elem& y) {
            auto acc = alg.mul(mapped[0], y);
            auto power = y;
            for (std::size_t i = 1; i < mapped.size(); ++i) {
                power = alg.frobenius(power);
                if (!alg.is_zero(mapped[i])) acc = alg.add(acc, alg.mul(mapped[i], power));
            }
            return acc;
        };
        auto acc = alg.zero();
        for (std::size_t j = a.size(); j-- > 0;) {
            acc = act(acc);
            if (a.coeff(j) != 0) acc = alg.add(acc, alg.mul(alg.from_fq(a.coeff(j)), xi));
        }
        return acc;
    }

    /// Every a_i integral at l and a_d a unit at l.
    bool good_reduction(const APoly& l) const;

    /// "T + tau + tau^2" style rendering.
    std::string to_string() const;

   private:
    template <FqAlgebra Alg>
    OrePoly<Alg> map_coefficients(const std::shared_ptr<const Alg>& alg) const {
        std::vector<typename Alg::Elem> v;
        v.reserve(coeffs_.size());
        for (const RationalFn& c : coeffs_) v.push_back(alg->from_k(c));
        return OrePoly<Alg>(alg, std::move(v));
    }

    FieldPtr field_;
    std::vector<RationalFn> coeffs_;
    std::shared_ptr<const KField> k_;
    OrePoly<KField> phi_t_;
};

/// Coefficient-wise reduction of an l-integral Ore polynomial; BadReductionError otherwise.
OrePoly<ResidueRing> ore_reduce_mod(const OrePoly<KField>& f, const APoly& l);

}  // namespace drinfeld

#endif
