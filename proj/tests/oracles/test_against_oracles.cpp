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

#include <random>

#include "drinfeld/apoly.hpp"
#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/resultant.hpp"
#include "drinfeld/supersingular.hpp"
#include "drinfeld/transcendence.hpp"
#include "oracle.hpp"

using namespace drinfeld;

namespace {

constexpr std::uint64_t kSeed = 7001;

oracle::Poly to_oracle(const APoly& a) { return oracle::Poly(a.coeffs().begin(), a.coeffs().end()); }

APoly from_oracle(const oracle::Poly& a, const FieldPtr& f) {
    return APoly(f, std::vector<Fq>(a.begin(), a.end()));
}

oracle::Poly random_poly(std::mt19937_64& rng, int p, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg), coef(0, p - 1);
    oracle::Poly a(static_cast<std::size_t>(deg(rng) + 1));
    for (int& c : a) c = coef(rng);
    return oracle::trim(a);
}

}  // namespace

TEST_CASE("ring operations agree with the reference") {
    std::mt19937_64 rng(kSeed);
    for (int p : {2, 3, 5, 7}) {
        const FieldPtr f = FqField::prime(static_cast<std::uint32_t>(p));
        for (int trial = 0; trial < 200; ++trial) {
            const oracle::Poly a = random_poly(rng, p, 8), b = random_poly(rng, p, 5);
            CHECK(to_oracle(from_oracle(a, f) * from_oracle(b, f)) == oracle::mul(a, b, p));
            CHECK(to_oracle(from_oracle(a, f) + from_oracle(b, f)) == oracle::add(a, b, p));
            if (!b.empty()) {
                CHECK(to_oracle(from_oracle(a, f) % from_oracle(b, f)) == oracle::mod(a, b, p));
                CHECK(to_oracle(APoly::gcd(from_oracle(a, f), from_oracle(b, f))) == oracle::gcd(a, b, p));
            }
        }
    }
}

TEST_CASE("irreducibility agrees with trial division") {
    for (auto [p, nmax] : {std::pair<int, int>{2, 9}, {3, 5}, {5, 3}}) {
        const FieldPtr f = FqField::prime(static_cast<std::uint32_t>(p));
        for (int n = 1; n <= nmax; ++n)
            for (const oracle::Poly& g : oracle::monic_polys(p, n))
                CHECK(is_irreducible(from_oracle(g, f)) == oracle::is_irreducible_by_trial_division(g, p));
    }
}

TEST_CASE("irreducible enumeration agrees with the sieve") {
    for (auto [p, nmax] : {std::pair<int, unsigned>{2, 8}, {3, 5}, {5, 3}}) {
        const FieldPtr f = FqField::prime(static_cast<std::uint32_t>(p));
        for (unsigned n = 1; n <= nmax; ++n) {
            auto sieve = oracle::irreducibles_by_sieve(p, static_cast<int>(n));
            std::vector<oracle::Poly> mine;
            for (const APoly& a : enumerate_irreducibles(f, n)) mine.push_back(to_oracle(a));
            std::sort(sieve.begin(), sieve.end());
            std::sort(mine.begin(), mine.end());
            CHECK(mine == sieve);
            CHECK(count_irreducibles(static_cast<std::uint64_t>(p), n) == Integer(static_cast<unsigned long>(sieve.size())));
        }
    }
}

TEST_CASE("resultants agree with the Euclidean reference under specialization") {
    std::mt19937_64 rng(kSeed + 1);
    for (int p : {5, 7}) {
        const FieldPtr f = FqField::prime(static_cast<std::uint32_t>(p));
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<int> deg(1, 3);
            std::vector<APoly> fc, gc;
            const int df = deg(rng), dg = deg(rng);
            for (int i = 0; i <= df; ++i) fc.push_back(from_oracle(random_poly(rng, p, 2), f));
            for (int i = 0; i <= dg; ++i) gc.push_back(from_oracle(random_poly(rng, p, 2), f));
            if (fc.back().is_zero()) fc.back() = APoly::one(f);
            if (gc.back().is_zero()) gc.back() = APoly::one(f);
            const APolyX F(fc), G(gc);
            const APoly res = resultant(F, G);
            for (int c = 0; c < p; ++c) {
                const Fq cc = static_cast<Fq>(c);
                if (fc.back().eval(cc) == 0 || gc.back().eval(cc) == 0) continue;
                oracle::Poly fs, gs;
                for (const APoly& a : fc) fs.push_back(static_cast<int>(a.eval(cc)));
                for (const APoly& a : gc) gs.push_back(static_cast<int>(a.eval(cc)));
                CHECK(static_cast<int>(res.eval(cc)) == oracle::resultant(fs, gs, p));
            }
        }
    }
}

TEST_CASE("binomials mod p agree with Pascal's triangle") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int n = 0; n < 60; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(static_cast<int>(binomial_mod_p(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), p)) ==
                      oracle::binomial_pascal(n, k, static_cast<int>(p)));
}

TEST_CASE("supersingularity agrees with naive composition") {
    std::mt19937_64 rng(kSeed + 2);
    for (auto [p, nmax] : {std::pair<int, unsigned>{2, 4}, {3, 3}}) {
        const FieldPtr f = FqField::prime(static_cast<std::uint32_t>(p));
        for (int trial = 0; trial < 6; ++trial) {
            std::uniform_int_distribution<int> rank(1, 3);
            const int d = rank(rng);
            std::vector<oracle::Poly> coeffs{{0, 1}};
            for (int i = 1; i <= d; ++i) coeffs.push_back(random_poly(rng, p, 1));
            if (coeffs.back().empty()) coeffs.back() = {1};
            std::vector<RationalFn> k;
            for (const oracle::Poly& c : coeffs) k.push_back(RationalFn(from_oracle(c, f)));
            const DrinfeldModule phi(f, k);
            for (unsigned n = 1; n <= nmax; ++n)
                for (const APoly& l : enumerate_irreducibles(f, n)) {
                    if (!good_reduction(phi, l)) continue;
                    CHECK(is_supersingular(phi, l) == oracle::is_supersingular_naive(coeffs, to_oracle(l), p));
                }
        }
    }
}

TEST_CASE("rational point counts agree with coprime-pair enumeration") {
    for (int p : {2, 3})
        for (unsigned chi : {1u, 2u})
            CHECK(static_cast<long long>(northcott_enumerate(FqField::prime(static_cast<std::uint32_t>(p)), 1, chi).size()) ==
                  oracle::count_rational_points(p, static_cast<int>(chi)));
}

TEST_CASE("heights of rational points are max degrees in lowest terms") {
    std::mt19937_64 rng(kSeed + 3);
    for (int p : {2, 3, 5}) {
        const FieldPtr f = FqField::prime(static_cast<std::uint32_t>(p));
        for (int trial = 0; trial < 50; ++trial) {
            oracle::Poly a = random_poly(rng, p, 4), b = random_poly(rng, p, 4);
            if (b.empty()) b = {1};
            const AlgebraicPoint x = AlgebraicPoint::rational(RationalFn(from_oracle(a, f), from_oracle(b, f)));
            long long expected = 0;
            if (!a.empty()) {
                const oracle::Poly g = oracle::gcd(a, b, p);
                expected = std::max(oracle::degree(a) - oracle::degree(g), oracle::degree(b) - oracle::degree(g));
            }
            CHECK(point_height(x) == make_rational(expected, 1));
        }
    }
}
