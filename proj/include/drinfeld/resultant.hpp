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

#ifndef DRINFELD_RESULTANT_HPP
#define DRINFELD_RESULTANT_HPP

#include <cstdint>
#include <vector>

#include "drinfeld/polyx.hpp"

namespace drinfeld {

/// Ceilings that turn runaway computations into ResourceLimitError.
struct ResourceLimits {
    std::size_t max_sylvester_dim = 4096;
    /// Largest predicted T-degree of an intermediate polynomial.
    long long max_coefficient_degree = 1 << 20;
    /// Largest number of candidate polynomials an enumeration may visit.
    std::uint64_t max_enumeration = std::uint64_t{1} << 26;
};

using PolyMatrix = std::vector<std::vector<APolyX>>;

/// Sylvester matrix of f and g as polynomials in Y, coefficients high to low.
PolyMatrix sylvester_matrix(const APolyXY& f, const APolyXY& g);
/// Fraction-free (Bareiss) determinant over A[X] with row pivoting.
APolyX bareiss_determinant(PolyMatrix m);

/// Res_Y(f, g) over A[X].
APolyX resultant(const APolyXY& f, const APolyXY& g, const ResourceLimits& limits = {});
/// Res_X(f, g) for f, g in A[X].
APoly resultant(const APolyX& f, const APolyX& g, const ResourceLimits& limits = {});

/// Each A-coefficient of f viewed as a constant of A[X].
APolyXY lift_constants(const APolyX& f);

}  // namespace drinfeld

#endif
