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

#include <doctest.h>

#include "drinfeld/algebra.hpp"
#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/ore.hpp"
#include "drinfeld/parse.hpp"

using namespace drinfeld;

namespace {

RationalFn K(const char* s, const FieldPtr& f) { return parse_rational_fn(s, f); }

}  // namespace

TEST_CASE("twisted multiplication") {
    const FieldPtr f = FqField::prime(2);
    auto k = std::make_shared<const KField>(f);
    using O = OrePoly<KField>;
    const O tau = O::monomial(k, k->one(), 1);
    const O t = O::constant(k, K("T", f));
    CHECK(tau * t == O::monomial(k, K("T^2", f), 1));
    const O s = t + tau;
    CHECK(s * s == O(k, {K("T^2", f), K("T+T^2", f), K("1", f)}));
    CHECK(O::constant(k, k->one()) * s == s);
    CHECK((s * s).to_string() == "T^2 + (T^2+T)*tau + tau^2");
}

TEST_CASE("module images and action") {
    const FieldPtr f = FqField::prime(2);
    const DrinfeldModule phi = DrinfeldModule::carlitz(f);
    auto k = phi.k();
    using O = OrePoly<KField>;
    CHECK(phi.phi_image(parse_apoly("T", f)) == O(k, {K("T", f), K("1", f)}));
    CHECK(phi.phi_image(APoly::one(f)) == O::constant(k, k->one()));
    CHECK(phi.phi_image(parse_apoly("T^2", f)) == O(k, {K("T^2", f), K("T+T^2", f), K("1", f)}));
    CHECK(phi.phi_apply(*k, parse_apoly("T", f), K("T", f)).is_zero());
    CHECK(phi.phi_apply(*k, parse_apoly("T", f), K("1", f)) == K("T+1", f));
    // F_q-linearity and agreement of the two evaluation routes
    const FieldPtr f3 = FqField::prime(3);
    const DrinfeldModule c3 = DrinfeldModule::carlitz(f3);
    const RationalFn xi = K("(T+2)/T", f3);
    CHECK(c3.phi_apply(*c3.k(), APoly::constant(f3, 2), xi) == xi * K("2", f3));
    const APoly a = parse_apoly("T^3+2*T+1", f3);
    CHECK(c3.phi_apply(*c3.k(), a, xi) == c3.phi_image(a).apply(xi));
}

TEST_CASE("module validation") {
    const FieldPtr f = FqField::prime(2);
    CHECK_THROWS_AS(DrinfeldModule(f, {K("T", f)}), PreconditionError);
    CHECK_THROWS_AS(DrinfeldModule(f, {K("T+1", f), K("1", f)}), PreconditionError);
    CHECK_THROWS_AS(DrinfeldModule(f, {K("T", f), K("0", f)}), PreconditionError);
}

TEST_CASE("reduction modulo a prime") {
    const FieldPtr f = FqField::prime(2);
    const DrinfeldModule phi = DrinfeldModule::carlitz(f);
    const APoly l = parse_apoly("T", f);
    const auto red = ore_reduce_mod(phi.phi_image(l), l);
    REQUIRE(red.deg() == 1);
    CHECK(red.coeffs()[0].is_zero());
    CHECK(red.coeffs()[1].is_one());

    auto k = phi.k();
    const OrePoly<KField> bad(k, {K("1/T", f)});
    try {
        ore_reduce_mod(bad, l);
        FAIL("expected bad reduction");
    } catch (const BadReductionError& e) {
        CHECK(std::string(e.what()) == "bad reduction at T");
    }

    const DrinfeldModule rank2(f, {K("T", f), K("1", f), K("1", f)});
    const APoly l2 = parse_apoly("T^2+T+1", f);
    const auto r2 = ore_reduce_mod(rank2.phi_image(l2), l2);
    REQUIRE(r2.deg() == 4);
    for (int i = 0; i < 4; ++i) CHECK(r2.coeffs()[i].is_zero());
    CHECK(r2.coeffs()[4].is_one());
}

TEST_CASE("residue ring arithmetic") {
    const FieldPtr f = FqField::prime(3);
    const ResidueRing r(parse_apoly("T^2+1", f));
    const APoly a = parse_apoly("T+2", f);
    CHECK(r.mul(a, r.inverse(a)) == APoly::one(f));
    CHECK(r.frobenius(parse_apoly("T", f)) == parse_apoly("2*T", f));
    CHECK_THROWS_AS(ResidueRing(parse_apoly("T^2+2", f)), PreconditionError);
    CHECK_THROWS_AS(r.from_k(K("1/(T^2+1)", f)), BadReductionError);
}
