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

#include "drinfeld/apoly.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/rational_fn.hpp"

using namespace drinfeld;

namespace {
APoly A(const char* s, const FieldPtr& f) { return parse_apoly(s, f); }
}  // namespace

TEST_CASE("prime field arithmetic") {
    const FieldPtr f = FqField::prime(5);
    CHECK(f->q() == 5);
    CHECK(f->add(3, 4) == 2);
    CHECK(f->mul(3, 4) == 2);
    CHECK(f->mul(f->inv(3), 3) == 1);
    CHECK(f->pow(2, 4) == 1);
    CHECK_THROWS_AS(f->inv(0), PreconditionError);
}

TEST_CASE("extension field F_4 and F_9") {
    const FieldPtr f4 = FqField::of_order(4);
    CHECK(f4->p() == 2);
    CHECK(f4->e() == 2);
    for (Fq a = 1; a < 4; ++a) {
        CHECK(f4->mul(a, f4->inv(a)) == 1);
        CHECK(f4->pow(a, 3) == 1);
    }
    const FieldPtr f9 = FqField::of_order(9);
    for (Fq a = 1; a < 9; ++a) CHECK(f9->pow(a, 8) == 1);
    // Frobenius is additive
    for (Fq a = 0; a < 9; ++a)
        for (Fq b = 0; b < 9; ++b) CHECK(f9->pow(f9->add(a, b), 3) == f9->add(f9->pow(a, 3), f9->pow(b, 3)));
    CHECK_THROWS_AS(FqField::of_order(6), PreconditionError);
}

TEST_CASE("polynomial ring basics") {
    const FieldPtr f2 = FqField::prime(2);
    CHECK(A("T+1", f2) * A("T+1", f2) == A("T^2+1", f2));
    CHECK(APoly::gcd(A("T^2+T", f2), A("T", f2)) == A("T", f2));
    const FieldPtr f3 = FqField::prime(3);
    auto [quo, rem] = APoly::divmod(A("T^3+1", f3), A("T+1", f3));
    CHECK(quo == A("T^2+2*T+1", f3));
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(APoly::divmod(A("T", f3), APoly(f3)), PreconditionError);
}

TEST_CASE("euclidean laws hold on a grid") {
    const FieldPtr f = FqField::prime(3);
    const std::vector<APoly> polys{A("T^4+2*T+1", f), A("2*T^3+T", f), A("T^2+1", f), A("T+2", f), A("1", f)};
    for (const APoly& a : polys)
        for (const APoly& b : polys) {
            auto [q, r] = APoly::divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.deg() < b.deg());
            const auto x = APoly::xgcd(a, b);
            CHECK(x.g.is_monic());
            CHECK(x.s * a + x.t * b == x.g);
        }
}

TEST_CASE("irreducibility") {
    const FieldPtr f = FqField::prime(2);
    CHECK(is_irreducible(A("T", f)));
    CHECK_FALSE(is_irreducible(A("T^2+1", f)));
    CHECK(is_irreducible(A("T^2+T+1", f)));
    CHECK(is_irreducible(A("T^4+T+1", f)));
    CHECK_FALSE(is_irreducible(A("T^4+T^2+1", f)));
}

TEST_CASE("enumerate and count irreducibles") {
    const FieldPtr f = FqField::prime(2);
    const auto one = enumerate_irreducibles(f, 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == A("T", f));
    CHECK(one[1] == A("T+1", f));
    const auto two = enumerate_irreducibles(f, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == A("T^2+T+1", f));
    CHECK(enumerate_irreducibles(f, 4).size() == 3);
    CHECK(count_irreducibles(2, 1) == 2);
    CHECK(count_irreducibles(2, 2) == 1);
    CHECK(count_irreducibles(3, 2) == 3);
    CHECK(count_irreducibles(2, 4) == 3);
    CHECK(count_irreducibles(4, 1) == 4);
    CHECK(enumerate_irreducibles(FqField::of_order(4), 2).size() == 6);
}

TEST_CASE("rational functions normalize") {
    const FieldPtr f = FqField::prime(3);
    const RationalFn r(A("T^2+2*T+1", f), A("2*T+2", f));
    CHECK(r.den() == APoly::one(f));
    CHECK(r.num() == A("2*T+2", f));
    CHECK(r.height() == 1);
    const RationalFn s = parse_rational_fn("1/T", f);
    CHECK(s.valuation(A("T", f)) == -1);
    CHECK((s * RationalFn(A("T", f))).is_polynomial());
    CHECK(RationalFn(APoly(f)).to_string() == "0");
}
