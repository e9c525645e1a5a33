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

#include "drinfeld/algebra.hpp"
#include "drinfeld/errors.hpp"

namespace drinfeld {

ResidueRing::ResidueRing(APoly l) : l_(std::move(l)) {
    if (!l_.is_monic() || l_.deg() < 1) throw PreconditionError("residue modulus must be monic of positive degree");
    if (!is_irreducible(l_)) throw PreconditionError("residue modulus " + l_.to_string() + " is not irreducible");
}

ResidueRing::Elem ResidueRing::from_k(const RationalFn& r) const {
    if (r.is_zero()) return zero();
    APoly den = r.den() % l_;
    if (den.is_zero()) throw BadReductionError(l_.to_string());
    APoly num = r.num() % l_;
    if (r.den().is_one()) return num;
    return (num * inverse(den)) % l_;
}

ResidueRing::Elem ResidueRing::inverse(const Elem& a) const {
    auto [g, s, t] = APoly::xgcd(a, l_);
    if (!g.is_one()) throw PreconditionError("element not invertible modulo " + l_.to_string());
    return s % l_;
}

ResidueRing::Elem ResidueRing::frobenius(const Elem& a) const {
    return APoly::powmod(a, Integer(static_cast<unsigned long>(field()->q())), l_);
}

}  // namespace drinfeld
