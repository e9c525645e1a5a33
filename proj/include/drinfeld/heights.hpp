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

#ifndef DRINFELD_HEIGHTS_HPP
#define DRINFELD_HEIGHTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/numeric.hpp"
#include "drinfeld/polyx.hpp"
#include "drinfeld/quotient.hpp"
#include "drinfeld/resultant.hpp"

namespace drinfeld {

/// A point of an algebraic closure of k, given by its primitive minimal polynomial over A.
///
/// Irreducibility over k is assumed, not tested. A reducible input behaves
/// as the formal root cycle of P: heights become averages over all roots.
struct AlgebraicPoint {
    APolyX minpoly;
    long long D = 0;
    long long D_sep = 0;
    long long D_pi = 0;

    /// Normalizes to content 1 and leading coefficient with leading F_q-coefficient 1;
    /// rejects constant and non-squarefree (after deflation) inputs.
    static AlgebraicPoint from_minpoly(const APolyX& p, const ResourceLimits& limits = {});
    /// The degree-one point x0 in k.
    static AlgebraicPoint rational(const RationalFn& x0);

    FieldPtr field() const { return field_of(minpoly); }
};

/// (D_sep, D_pi); throws on constant input.
std::pair<long long, long long> inseparable_split(const APolyX& p);

/// Height of [c_0 : ... : c_n] over k; throws on the zero vector.
long long projective_height(const std::vector<RationalFn>& coords);
/// Max T-degree of the coefficients after removing their content.
long long projective_height(const APolyX& coeffs);

Rational point_height(const AlgebraicPoint& x);
long long module_height(const DrinfeldModule& phi);
/// 2(d+1) h(Phi), a strict upper bound for |h - canonical height|.
Rational gamma_bound(const DrinfeldModule& phi);

/// Phi(a)(x) as the reduced element r(Y) of k[Y]/(P_x).
KPolyX phi_apply_at(const AlgebraicPoint& x, const DrinfeldModule& phi, const APoly& a);

/// Primitive Res_Y(P_x(Y), X - Phi(a)(Y)), degree D in X.
APolyX image_charpoly(const AlgebraicPoint& x, const DrinfeldModule& phi, const APoly& a, const ResourceLimits& limits = {});
/// Height of the points whose char polynomial is c (max T-degree over deg_X).
Rational charpoly_height(const APolyX& c);

struct HeightInterval {
    Rational estimate;
    Rational error;
    unsigned n = 0;

    Rational lower() const { return estimate > error ? Rational(estimate - error) : Rational(0); }
    Rational upper() const { return estimate + error; }
    bool intersects(const HeightInterval& o) const { return lower() <= o.upper() && o.lower() <= upper(); }
    /// Estimate and error both multiplied by s > 0.
    HeightInterval scaled(const Rational& s) const { return {estimate * s, error * s, n}; }
};

/// estimate = h(Phi(T^n)(x)) / q^{dn}, error = gamma / q^{dn}.
HeightInterval canonical_height(const AlgebraicPoint& x, const DrinfeldModule& phi, unsigned n, const ResourceLimits& limits = {});
/// h(Phi(a)(x)) computed through image_charpoly.
Rational image_height(const AlgebraicPoint& x, const DrinfeldModule& phi, const APoly& a, const ResourceLimits& limits = {});

struct TorsionResult {
    enum class Kind { Torsion, NonTorsionCertified, Unknown };
    Kind kind = Kind::Unknown;
    /// Monic generator of the annihilator, set for Torsion.
    std::optional<APoly> witness;
    /// Set unless Torsion.
    std::optional<HeightInterval> interval;
};
std::string to_string(TorsionResult::Kind kind);

TorsionResult torsion_status(const AlgebraicPoint& x, const DrinfeldModule& phi, unsigned search_deg, unsigned depth,
                             const ResourceLimits& limits = {});

/// All points of degree <= d_max and height <= chi, ordered by degree then coefficient index.
std::vector<AlgebraicPoint> northcott_enumerate(const FieldPtr& field, unsigned d_max, unsigned chi, const ResourceLimits& limits = {});

/// Height of the point [1 : c_1 : ... : c_n] (affine) or [c_1 : ... : c_n] over k(x),
/// each c_i given by its reduced representative in k[Y]/(P_x).
Rational vector_height(const AlgebraicPoint& x, const std::vector<KPolyX>& coords, bool affine, const ResourceLimits& limits = {});

/// (1/D) sum over places w above l of n_w max(0, -w(x)), with w normalized by deg l.
Rational local_height(const AlgebraicPoint& x, const APoly& l);

}  // namespace drinfeld

#endif
