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

#include "drinfeld/errors.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/polyx.hpp"
#include "drinfeld/quotient.hpp"
#include "drinfeld/resultant.hpp"

using namespace drinfeld;

TEST_CASE("bivariate helpers") {
    const FieldPtr f = FqField::prime(3);
    const APolyX p = parse_apolyx("(T^2+T)*X^2 + (2*T^2+2*T)*X", f);
    CHECK(content(p) == parse_apoly("T^2+T", f));
    CHECK(primitive_normalize(p) == parse_apolyx("X^2 + 2*X", f));
    CHECK(max_t_degree(p) == 2);
    const KPolyX kp = parse_kpolyx("X/T + 1/(T+1)", f);
    auto [cleared, delta] = clear_denominators(kp);
    CHECK(delta == parse_apoly("T^2+T", f));
    CHECK(cleared == parse_apolyx("(T+1)*X + T", f));
}

TEST_CASE("resultants") {
    const FieldPtr f = FqField::prime(2);
    // Res(X - a, g) = g(a)
    const APolyX g = parse_apolyx("X^2 + T*X + 1", f);
    CHECK(resultant(parse_apolyx("X + T^2", f), g) == parse_apoly("T^4+T^3+1", f));
    // Res(f, g) = 0 iff a common factor
    CHECK(resultant(parse_apolyx("X^2+T^2", f), parse_apolyx("X^2+T*X", f)).is_zero());
    const FieldPtr f5 = FqField::prime(5);
    const APolyX a = parse_apolyx("X^2 + 3", f5), b = parse_apolyx("X^3 + T*X + 1", f5);
    const APoly rab = resultant(a, b), rba = resultant(b, a);
    CHECK(rab == rba);  // sign (-1)^{2*3}
}

TEST_CASE("resource ceiling on Sylvester matrices") {
    const FieldPtr f = FqField::prime(2);
    ResourceLimits tight;
    tight.max_sylvester_dim = 3;
    CHECK_THROWS_AS(resultant(parse_apolyx("X^2+1", f), parse_apolyx("X^2+T", f), tight), ResourceLimitError);
}

TEST_CASE("quotient algebra") {
    const FieldPtr f = FqField::prime(2);
    const QuotientAlgebra alg(parse_apolyx("X^2 + X + T", f));
    const KPolyX x = alg.generator();
    CHECK(alg.mul(x, x) == parse_kpolyx("X + T", f));
    // Frobenius agrees with squaring in characteristic 2
    const KPolyX y = parse_kpolyx("X/T + 1", f);
    CHECK(alg.frobenius(y) == alg.mul(y, y));
    CHECK(alg.dimension() == 2);
}
