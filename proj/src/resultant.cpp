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

#include "drinfeld/resultant.hpp"

namespace drinfeld {

PolyMatrix sylvester_matrix(const APolyXY& f, const APolyXY& g) {
    const std::size_t m = static_cast<std::size_t>(f.deg());
    const std::size_t n = static_cast<std::size_t>(g.deg());
    const std::size_t dim = m + n;
    PolyMatrix s(dim, std::vector<APolyX>(dim));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f.coeffs()[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g.coeffs()[n - i];
    return s;
}

APolyX bareiss_determinant(PolyMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return APolyX();
    bool negate = false;
    APolyX prev;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k].is_zero()) ++swap;
            if (swap == n) return APolyX();
            std::swap(a[k], a[swap]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                APolyX v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = k == 0 ? std::move(v) : exact_div(v, prev);
            }
            a[i][k] = APolyX();
        }
        prev = a[k][k];
    }
    APolyX det = a[n - 1][n - 1];
    return negate ? -det : det;
}

APolyX resultant(const APolyXY& f, const APolyXY& g, const ResourceLimits& limits) {
    if (f.is_zero() || g.is_zero()) return APolyX();
    const std::size_t dim = static_cast<std::size_t>(f.deg() + g.deg());
    if (dim > limits.max_sylvester_dim)
        throw ResourceLimitError("Sylvester dimension " + std::to_string(dim) + " exceeds the ceiling " +
                                 std::to_string(limits.max_sylvester_dim));
    if (dim == 0) {
        FieldPtr field = field_of(f.leading());
        return APolyX::constant(APoly::one(field ? field : field_of(g.leading())));
    }
    if (f.deg() == 0) return pow(f.leading(), static_cast<unsigned long>(g.deg()));
    if (g.deg() == 0) return pow(g.leading(), static_cast<unsigned long>(f.deg()));
    return bareiss_determinant(sylvester_matrix(f, g));
}

APolyXY lift_constants(const APolyX& f) {
    std::vector<APolyX> out;
    out.reserve(f.size());
    for (const APoly& c : f.coeffs()) out.push_back(c.is_zero() ? APolyX() : APolyX::constant(c));
    return APolyXY(std::move(out));
}

APoly resultant(const APolyX& f, const APolyX& g, const ResourceLimits& limits) {
    APolyX r = resultant(lift_constants(f), lift_constants(g), limits);
    if (r.is_zero()) return APoly(field_of(f));
    return r.coeffs()[0];
}

}  // namespace drinfeld
