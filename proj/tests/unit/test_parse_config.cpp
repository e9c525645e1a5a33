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

#include <cstdio>
#include <fstream>

#include "drinfeld/config.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/parse.hpp"

using namespace drinfeld;

TEST_CASE("polynomial grammar") {
    const FieldPtr f = FqField::prime(3);
    CHECK(parse_apoly("2*T^3 + T + 1", f).coeffs() == std::vector<Fq>{1, 1, 0, 2});
    CHECK(parse_apoly("(T+1)^2", f) == parse_apoly("T^2+2*T+1", f));
    CHECK(parse_apoly("0", f).is_zero());
    CHECK(parse_rational_fn("(T+1)/(T^2+2*T+1)", f) == parse_rational_fn("1/(T+1)", f));
    const APolyX p = parse_apolyx("T*X^2 + X + 2", f);
    REQUIRE(p.deg() == 2);
    CHECK(p.coeffs()[2] == parse_apoly("T", f));
}

TEST_CASE("parse errors carry positions") {
    const FieldPtr f = FqField::prime(2);
    CHECK_THROWS_AS(parse_apoly("T+", f), ParseError);
    CHECK_THROWS_AS(parse_apoly("3*T", f), ParseError);
    CHECK_THROWS_AS(parse_apoly("T^", f), ParseError);
    CHECK_THROWS_AS(parse_apoly("u*T", f), ParseError);
    try {
        parse_apoly("T + * 1", f);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("extension-field coefficients") {
    const FieldPtr f4 = FqField::of_order(4);
    const APoly a = parse_apoly("(u+1)*T^2 + u", f4);
    CHECK(a.deg() == 2);
    CHECK(parse_apoly(a.to_string(), f4) == a);
}

TEST_CASE("config documents") {
    const ConfigDoc doc = parse_config(
        "# rank two\n"
        "name = \"rank2\"\n"
        "q = 2\n"
        "coeffs = [\"T\",\n  \"1\", \"1\"]  # trailing comment\n");
    CHECK(std::get<long long>(doc.at("q")) == 2);
    CHECK(std::get<std::vector<std::string>>(doc.at("coeffs")).size() == 3);
    const DrinfeldModule phi = module_from_config(doc);
    CHECK(phi.rank() == 2);
    CHECK_THROWS_AS(parse_config("q = "), ParseError);
    CHECK_THROWS_AS(module_from_config(parse_config("q = 2\ncoeffs = [\"T+1\", \"1\"]\n")), PreconditionError);
    CHECK_THROWS_AS(module_from_config(parse_config("q = 2\ncoeffs = [\"T\", \"0\"]\n")), PreconditionError);
}

TEST_CASE("module and point loading") {
    const DrinfeldModule c3 = load_module("carlitz(q=3)");
    CHECK(c3.q() == 3);
    CHECK(c3.rank() == 1);
    const std::string path = "drinfeld_unit_point.toml";
    {
        std::ofstream out(path);
        out << "minpoly = \"T*X + 1\"\n";
    }
    const APolyX p = load_point(path, c3.field());
    CHECK(p == parse_apolyx("T*X+1", c3.field()));
    std::remove(path.c_str());
    CHECK(load_point("X^2+T", c3.field()).deg() == 2);
    CHECK_THROWS_AS(load_module("no-such-file.toml"), PreconditionError);
}

TEST_CASE("extension field from config modulus") {
    const DrinfeldModule phi = module_from_config(parse_config("q = 4\np = 2\nfield_modulus = [1, 1, 1]\ncoeffs = [\"T\", \"u\"]\n"));
    CHECK(phi.q() == 4);
    CHECK(phi.field()->e() == 2);
}
