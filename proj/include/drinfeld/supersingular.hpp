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

#ifndef DRINFELD_SUPERSINGULAR_HPP
#define DRINFELD_SUPERSINGULAR_HPP

#include <string>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/numeric.hpp"
#include "drinfeld/resultant.hpp"

namespace drinfeld {

bool good_reduction(const DrinfeldModule& phi, const APoly& l);

/// Phi(l) == tau^{d deg l} in (A/(l)){tau}, l normalized to monic; BadReductionError when reduction is bad at l.
bool is_supersingular(const DrinfeldModule& phi, const APoly& l);

struct ScanResult {
    unsigned n = 0;
    std::size_t count_total = 0;
    std::size_t count_ss = 0;
    std::vector<APoly> supersingular;
    std::vector<APoly> bad_reduction;
};

/// Tests every monic irreducible of degree n; output independent of the worker count.
ScanResult scan_degree(const DrinfeldModule& phi, unsigned n, unsigned workers = 1, const ResourceLimits& limits = {});

struct DensityConfig {
    unsigned n_max = 1;
    Rational r = 1;
    Rational c1 = make_rational(1, 2);
    unsigned eta = 1;
};

struct DensityRow {
    unsigned n = 0;
    std::size_t count_ss = 0;
    std::size_t count_total = 0;
    Rational ratio;
    /// c1 q^{rN} / N; exact when rN is an integer.
    bool rv_curve_exact = true;
    Rational rv_curve;
    /// Decimal rendering, prefixed by "~" when inexact.
    std::string rv_curve_text;
    Rational chebotarev_curve;
    bool satisfied = false;
    bool skipped_by_eta = false;
    std::vector<APoly> bad_reduction;
};

std::vector<DensityRow> density_report(const DrinfeldModule& phi, const DensityConfig& config, unsigned workers = 1,
                                       const ResourceLimits& limits = {});

/// count >= c1 q^{rN} / N decided exactly.
bool rv_satisfied(std::size_t count, std::uint64_t q, unsigned n, const Rational& r, const Rational& c1);

}  // namespace drinfeld

#endif
