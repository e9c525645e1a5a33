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

#include "drinfeld/config.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/transcendence.hpp"

using namespace drinfeld;

namespace {

AlgebraicPoint P(const char* s, const FieldPtr& f) { return AlgebraicPoint::from_minpoly(parse_apolyx(s, f)); }
APolyX X(const char* s, const FieldPtr& f) { return parse_apolyx(s, f); }

}  // namespace

TEST_CASE("divided derivatives") {
    const FieldPtr f = FqField::prime(2);
    CHECK(divided_derivative(X("X^2", f), 1, f).is_zero());
    CHECK(divided_derivative(X("X^3", f), 2, f) == X("X", f));
    const FieldPtr f3 = FqField::prime(3);
    for (std::uint64_t h = 0; h < 7; ++h) {
        const APolyX xh = APolyX::monomial(APoly::one(f3), h);
        CHECK(divided_derivative(xh, h, f3) == X("1", f3));
    }
    // Leibniz rule in the first order
    const APolyX a = X("T*X^3+X+1", f3), b = X("X^2+T", f3);
    CHECK(divided_derivative(a * b, 1, f3) ==
          divided_derivative(a, 1, f3) * b + a * divided_derivative(b, 1, f3));
    CHECK(binomial_mod_p(3, 2, 2) == 1);
    CHECK(binomial_mod_p(4, 2, 2) == 0);
}

TEST_CASE("multiplicity at an algebraic point") {
    const FieldPtr f = FqField::prime(2);
    const AlgebraicPoint x = P("X+T", f);
    const APolyX b = X("(X+T)^3*(X+1)", f);
    CHECK(multiplicity_at(b, x) == 3);
    CHECK(vanishing_derivative_count(b, x) == 3);
    CHECK(multiplicity_at(X("X+1", f), x) == 0);
    const AlgebraicPoint y = P("X^2+X+T", f);
    CHECK(multiplicity_at(X("(X^2+X+T)^2", f), y) == 2);
    CHECK(vanishing_derivative_count(X("(X^2+X+T)^2", f), y) == 2);
}

TEST_CASE("siegel lemma by hand") {
    const FieldPtr f = FqField::prime(2);
    const AlgebraicPoint x = AlgebraicPoint::rational(RationalFn(APoly::one(f)));
    const SiegelSystem sys = make_siegel_system(x, {{parse_kpolyx("1", f), parse_kpolyx("T", f)}}, 2);
    CHECK(sys.bound() == 1);
    const SiegelSolution sol = siegel_solve(sys);
    REQUIRE(sol.values.size() == 2);
    CHECK(sol.values[0] == parse_apoly("T", f));
    CHECK(sol.values[1] == parse_apoly("1", f));
    for (const KPolyX& r : siegel_residuals(sys, sol.values)) CHECK(r.is_zero());

    const SiegelSystem zero = make_siegel_system(x, {{parse_kpolyx("0", f), parse_kpolyx("0", f), parse_kpolyx("0", f)}}, 3);
    const SiegelSolution z = siegel_solve(zero);
    CHECK(z.values[0] == APoly::one(f));
    CHECK(z.values[1].is_zero());
    CHECK(z.values[2].is_zero());

    CHECK_THROWS_AS(make_siegel_system(P("X^2+X+T", f), {{parse_kpolyx("1", f), parse_kpolyx("X", f)}}, 2), PreconditionError);
}

TEST_CASE("auxiliary system shape") {
    const FieldPtr f = FqField::prime(2);
    const DrinfeldModule phi = DrinfeldModule::carlitz(f);
    const AuxSystem s = build_aux_system(phi, P("T*X+1", f), 2, 1, parse_apoly("T^2", f));
    CHECK(s.system.equations() == 1);
    CHECK(s.system.unknowns() == 4);
    const AuxSystem s2 = build_aux_system(phi, P("X^2+X+T", f), 3, 2, parse_apoly("T^2", f));
    CHECK(s2.system.equations() == 2);
    CHECK(s2.system.unknowns() == 9);
    CHECK_THROWS_AS(build_aux_system(phi, P("T*X+1", f), 2, 1, parse_apoly("T", f)), PreconditionError);
    CHECK(aux_deg_n(2, 1, 2) == 2);
    CHECK(aux_deg_n(3, 1, 2) == 2);
    CHECK(aux_deg_n(4, 1, 2) == 3);
}

TEST_CASE("auxiliary polynomial") {
    const FieldPtr f = FqField::prime(2);
    const DrinfeldModule phi = DrinfeldModule::carlitz(f);
    const AuxPolynomial a = build_aux_polynomial(phi, P("T*X+1", f), 2, 1);
    CHECK_FALSE(a.g_n.is_zero());
    CHECK(try_exact_div(primitive_normalize(a.g_n), X("T*X+1", f)).has_value());
    CHECK(a.row_bounds_hold);
    const AuxPolynomial b = build_aux_polynomial(phi, P("X^2+X+T", f), 3, 2);
    CHECK(try_exact_div(b.g_n, X("(X^2+X+T)^2", f)).has_value());
    CHECK(b.multiplicity >= 2);
    const AuxPolynomial trivial = build_aux_polynomial(phi, P("T*X+1", f), 1, 0);
    CHECK(trivial.g_n == X("1", f));
}

TEST_CASE("row height bound formula") {
    CHECK(row_height_bound(2, 1, 5, 2, 1, 0) == 12);
    CHECK(row_height_bound(2, 0, 1, 2, 1, 0) == 2);
    CHECK(row_height_bound(0, 3, 3, 2, 1, 0) == 0);
}

TEST_CASE("vanishing modulo a supersingular prime") {
    const FieldPtr f = FqField::prime(2);
    const DrinfeldModule phi = DrinfeldModule::carlitz(f);
    const APoly l = parse_apoly("T+1", f);
    for (const char* s : {"T*X+1", "X+T"}) {
        const AlgebraicPoint x = P(s, f);
        const AuxPolynomial a = build_aux_polynomial(phi, x, 2, 1);
        const VanishingResult v = supersingular_vanishing_check(a, 0, phi, l, x);
        CHECK(v.holds);
        CHECK((v.zeta_is_zero || v.valuation >= 1));
        const VanishingResult vacuous = supersingular_vanishing_check(a, 1, phi, l, x);
        CHECK(vacuous.required == 0);
        CHECK(vacuous.holds);
    }
}
