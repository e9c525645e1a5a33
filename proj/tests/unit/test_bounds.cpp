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

#include <cmath>

#include "drinfeld/bounds.hpp"
#include "drinfeld/errors.hpp"

using namespace drinfeld;

namespace {

BoundInputs inputs(unsigned d, long h, long c, Rational r, std::uint64_t q = 2) {
    BoundInputs in;
    in.q = q;
    in.d = d;
    in.h_phi = h;
    in.c_phi = c;
    in.r = r;
    return in;
}

}  // namespace

TEST_CASE("log brackets") {
    CHECK(log_q_bracket(Rational(65536), 2) == Interval::point(16));
    CHECK(log_q_bracket(make_rational(1, 8), 2) == Interval::point(-3));
    CHECK(log_q_bracket(Rational(81), 3) == Interval::point(4));
    for (long v : {3L, 5L, 6500L, 26000L, 123456789L}) {
        const Interval b = log_q_bracket(Rational(v), 2, 64);
        const double ref = std::log2(static_cast<double>(v));
        CHECK_FALSE(b.is_exact());
        CHECK(b.lo.get_d() <= ref + 1e-12);
        CHECK(b.hi.get_d() >= ref - 1e-12);
        CHECK(b.width() <= make_rational(1, 1) / Rational(ipow(Integer(2), 60)));
    }
    const Interval third = q_power_bracket(8, make_rational(1, 3), 40);
    CHECK(third.contains(2));
    const Interval r = q_power_bracket(2, make_rational(1, 2), 40);
    CHECK(r.lo * r.lo <= 2);
    CHECK(r.hi * r.hi >= 2);
    CHECK(common_floor(Interval{make_rational(7, 2), make_rational(15, 4)}) == Integer(3));
    CHECK_FALSE(common_floor(Interval{make_rational(7, 2), make_rational(17, 4)}).has_value());
}

TEST_CASE("first theorem constants") {
    const ConstantsSet c = theorem1_constants(inputs(1, 1, 1, 1));
    CHECK(c.c0 == Interval::point(26000));
    CHECK(c.kappa == 3);
    CHECK(c.mu == 3);
    CHECK(c.C0_first.value() == -5625);
    CHECK(c.C0.value() == -5625);
    CHECK(c.alpha == 1);
    CHECK(c.c4 == 48);
    CHECK(c.c3 == 25);
    CHECK(c.c2.value() == 25);
    CHECK_FALSE(c.lambda.has_value());
    CHECK_FALSE(c.C_rv_star.has_value());
    CHECK(c.C_rv_star_symbolic.find("N_Phi") != std::string::npos);
}

TEST_CASE("second theorem constants") {
    const ConstantsSet c = theorem2_constants(inputs(1, 1, 1, 1));
    CHECK(c.c0 == Interval::point(140000));
    CHECK(c.mu == 3);
    CHECK(c.kappa == 4);
    CHECK(*c.lambda == 3);
    CHECK(theorem2_constants(inputs(2, 1, 1, make_rational(1, 2))).kappa == 13);
}

TEST_CASE("parameter ranges") {
    CHECK_THROWS_AS(theorem1_constants(inputs(0, 1, 1, 1)), PreconditionError);
    CHECK_THROWS_AS(theorem1_constants(inputs(1, 0, 1, 1)), PreconditionError);
    CHECK_THROWS_AS(theorem1_constants(inputs(1, 1, 1, 0)), PreconditionError);
    CHECK_THROWS_AS(theorem1_constants(inputs(1, 1, 1, make_rational(3, 2))), PreconditionError);
    CHECK_THROWS_AS(theorem_constants(3, inputs(1, 1, 1, 1)), PreconditionError);
}

TEST_CASE("RV* constant with explicit N_Phi") {
    BoundInputs in = inputs(1, 1, 1, 1);
    in.n_phi = Integer(3);
    const ConstantsSet c = theorem1_constants(in);
    REQUIRE(c.C_rv_star.has_value());
    CHECK(c.C_rv_star->value() == -100);
}

TEST_CASE("lower bound") {
    const ConstantsSet c1 = theorem1_constants(inputs(1, 1, 1, 1));
    CHECK(lower_bound(1, 1, c1).value() == c1.C0.value());
    CHECK(lower_bound(65536, 1, c1).value() == -5625 + 3 * 2 - 16 - 3 * 4);
    const LogQValue odd = lower_bound(1000, 1, c1);
    CHECK_FALSE(odd.is_exact());
    CHECK(odd.exponent.hi < lower_bound(512, 1, c1).exponent.lo);
    const ConstantsSet c2 = theorem2_constants(inputs(1, 1, 1, 1));
    const LogQValue with_pi = lower_bound(65536, 2, c2);
    CHECK(with_pi.value() == c2.C0.value() + 3 * 2 - 16 - 4 * 4 - 3);
    CHECK(lower_bound(65536, 4, c2).value() == with_pi.value() - 3);
    CHECK_THROWS_AS(lower_bound(65536, 1, c2), PreconditionError);
    CHECK_THROWS_AS(lower_bound(65536, 2, c1), PreconditionError);
    CHECK_THROWS_AS(lower_bound(12, 3, c2), PreconditionError);
    CHECK_THROWS_AS(lower_bound(0, 1, c1), PreconditionError);
}

TEST_CASE("monotonicity") {
    const ConstantsSet c = theorem1_constants(inputs(1, 1, 1, 1));
    Rational prev = 1;
    for (long D = 1; D <= 4096; D = D * 3 + 1) {
        const LogQValue b = lower_bound(D, 1, c);
        CHECK(b.exponent.hi <= prev);
        prev = b.exponent.lo;
    }
    // C0 shrinks as r decreases and as alpha grows
    const ConstantsSet r_small = theorem1_constants(inputs(1, 1, 1, make_rational(1, 2)));
    CHECK(r_small.C0.exponent.hi <= c.C0.exponent.lo);
    const ConstantsSet big_alpha = theorem1_constants(inputs(1, 2, 1, 1));
    CHECK(big_alpha.C0.exponent.hi <= c.C0.exponent.lo);
}

TEST_CASE("parameter selection") {
    const ConstantsSet c = theorem1_constants(inputs(1, 1, 1, 1));
    const ParameterSet p = parameter_select(65536, c);
    CHECK(p.L == Integer(26000) * 26000 * 65536 + 1);
    CHECK(p.h_order == Integer(26000) * 65536 / 16);
    CHECK(p.t == Integer(26000) * 26000 * 26000 * 65536 * 16 / 64);
    CHECK(p.deg_l == 64);
    CHECK(p.L * p.L > p.t * 65536);
    CHECK(2 * p.h_order <= p.t);
    const ParameterSet ins = parameter_select(65536, c, 2);
    CHECK(ins.inseparable());
    CHECK(ins.L == 2 * (p.L - 1) + 1);
    CHECK(ins.t == 2 * p.t);
    CHECK_THROWS_AS(parameter_select(8, c), PreconditionError);
}

TEST_CASE("northcott and height-gap exponents") {
    CHECK(northcott_bound(1, 1).value() == 5);
    CHECK(northcott_bound(2, 1).value() == 20);
    CHECK(c2_bound(1, 1, 1, 1).value() == -25);
    CHECK(c2_bound(1, 1, 1, 3).value() == -225);
    CHECK_THROWS_AS(northcott_bound(0, 1), PreconditionError);
}

TEST_CASE("c0 dominance over a parameter grid") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (unsigned d = 1; d <= 4; ++d)
            for (long h = 1; h <= 3; ++h)
                for (long c = 1; c <= 3; ++c)
                    for (Rational r : {make_rational(1, 4), make_rational(1, 2), Rational(1)}) CHECK(c0_dominates(inputs(d, h, c, r, q)));
}
