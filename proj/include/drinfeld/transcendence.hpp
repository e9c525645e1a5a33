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

#ifndef DRINFELD_TRANSCENDENCE_HPP
#define DRINFELD_TRANSCENDENCE_HPP

#include <optional>
#include <vector>

#include "drinfeld/heights.hpp"

namespace drinfeld {

/// C(n, k) mod p by Lucas's theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Coefficient of H^h in B(X + H): d^{(h)} X^n = C(n, h) X^{n-h}.
template <class C>
UPoly<C> divided_derivative(const UPoly<C>& b, std::uint64_t h, const FieldPtr& field) {
    if (h == 0 || b.is_zero()) return b;
    if (static_cast<long long>(h) > b.deg()) return UPoly<C>();
    std::vector<C> out(b.size() - h);
    for (std::size_t n = h; n < b.size(); ++n) {
        std::uint32_t c = binomial_mod_p(n, h, field->p());
        if (c != 0 && !b.coeffs()[n].is_zero()) out[n - h] = scale_fq(b.coeffs()[n], field->from_int(c));
    }
    return UPoly<C>(std::move(out));
}

/// Largest m with P_x^m | B in k[X].
long long multiplicity_at(const APolyX& b, const AlgebraicPoint& x);
/// Number of consecutive h = 0, 1, ... with d^{(h)}B(x) = 0; equals D_pi times multiplicity_at.
long long vanishing_derivative_count(const APolyX& b, const AlgebraicPoint& x);

/// M equations sum_i x_i a_{j,i} = 0 over k(x), entries as reduced elements of k[Y]/(P_x).
struct SiegelSystem {
    AlgebraicPoint point;
    std::vector<std::vector<KPolyX>> rows;
    /// Affine heights h(1 : a_{j,1} : ... : a_{j,N}).
    std::vector<Rational> row_heights;
    Rational sigma;
    std::size_t columns = 0;

    std::size_t equations() const noexcept { return rows.size(); }
    std::size_t unknowns() const noexcept { return columns; }
    /// D * sigma / (N - M D).
    Rational bound() const;
};

/// Computes row heights; requires N > M D and rows of equal length.
SiegelSystem make_siegel_system(const AlgebraicPoint& x, std::vector<std::vector<KPolyX>> rows, std::size_t unknowns,
                                const ResourceLimits& limits = {});

struct SiegelSolution {
    std::vector<APoly> values;
    long long delta = 0;
    Rational bound;
};

/// Nonzero solution with every deg_T x_i <= floor(bound); ContractViolation if none exists.
SiegelSolution siegel_solve(const SiegelSystem& sys);
/// Exact residuals sum_i x_i a_{j,i} in k[Y]/(P_x), one per equation.
std::vector<KPolyX> siegel_residuals(const SiegelSystem& sys, const std::vector<APoly>& values);

/// [(1/d) log_q L] + 1.
long long aux_deg_n(unsigned long L, unsigned d, std::uint32_t q);

/// Phi(N)(X) expanded as a polynomial in X.
KPolyX phi_polynomial(const DrinfeldModule& phi, const APoly& a);

struct AuxSystem {
    SiegelSystem system;
    APoly N;
    long long deg_n = 0;
    unsigned L = 0;
    unsigned t = 0;
    unsigned stride = 1;
    /// Unknown i*L + j multiplies X^i Phi(N)(X)^j.
    std::vector<KPolyX> monomials;
};

/// Equations d^{(h s)}(X^i Phi(N)(X)^j)(x) = 0 for h < t; requires L^2 > t D.
AuxSystem build_aux_system(const DrinfeldModule& phi, const AlgebraicPoint& x, unsigned L, unsigned t, const APoly& N,
                           unsigned stride = 1, const ResourceLimits& limits = {});

struct AuxPolynomial {
    AuxSystem aux;
    /// p_{ij} at index i*L + j.
    std::vector<APoly> p;
    /// sum p_ij X^i Phi(N)(X)^j, denominators cleared.
    APolyX g_n;
    long long max_coefficient_degree = -1;
    long long coefficient_bound = 0;
    long long multiplicity = 0;
    long long degree_bound = 0;
    /// Eq-(9)-style predicted bound per row.
    std::vector<Rational> row_bounds;
    /// Every recorded row height is within its predicted bound.
    bool row_bounds_hold = true;
    Rational h_x;
    Rational h_phi_n_x;
};

/// Full pipeline with postcondition checks (G_N != 0, degrees, multiplicity, row bounds).
AuxPolynomial build_aux_polynomial(const DrinfeldModule& phi, const AlgebraicPoint& x, unsigned L, unsigned t, unsigned stride = 1,
                                   const ResourceLimits& limits = {});

/// L (h_x + h_phi_n_x) + deg_N h_phi h_order.
Rational row_height_bound(const Rational& L, const Rational& h_x, const Rational& h_phi_n_x, const Rational& deg_n,
                          const Rational& h_phi, const Rational& h_order);

struct VanishingResult {
    bool zeta_is_zero = false;
    std::optional<RationalFn> zeta;
    long long valuation = 0;
    long long required = 0;
    bool holds = true;
};

/// v_l of the norm of d^{(h')}G_N(Phi(l)(x)), compared against t - h'.
VanishingResult supersingular_vanishing_check(const AuxPolynomial& aux, unsigned h_prime, const DrinfeldModule& phi,
                                              const APoly& l, const AlgebraicPoint& x, const ResourceLimits& limits = {});

}  // namespace drinfeld

#endif
