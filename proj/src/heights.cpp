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

#include "drinfeld/heights.hpp"

#include <algorithm>
#include <set>

namespace drinfeld {

namespace {

APolyX deflate(const APolyX& p, std::size_t k) {
    std::vector<APoly> out;
    for (std::size_t i = 0; i < p.size(); i += k) out.push_back(p.coeffs()[i]);
    return APolyX(std::move(out));
}

Integer q_power(const DrinfeldModule& phi, unsigned long e) { return ipow(Integer(static_cast<unsigned long>(phi.q())), e); }

// F_q coordinates of an A-polynomial vector, padded to a fixed T-degree
std::vector<Fq> flatten(const std::vector<APoly>& entries, std::size_t width) {
    std::vector<Fq> out;
    out.reserve(entries.size() * width);
    for (const APoly& a : entries)
        for (std::size_t i = 0; i < width; ++i) out.push_back(a.coeff(i));
    return out;
}

}  // namespace

std::pair<long long, long long> inseparable_split(const APolyX& p) {
    if (p.deg() < 1) throw PreconditionError("inseparable split of a constant polynomial");
    FieldPtr field = field_of(p);
    const std::size_t ch = field->p();
    APolyX cur = p;
    long long d_pi = 1;
    while (cur.derivative(field).is_zero()) {
        cur = deflate(cur, ch);
        d_pi *= static_cast<long long>(ch);
    }
    return {p.deg() / d_pi, d_pi};
}

AlgebraicPoint AlgebraicPoint::from_minpoly(const APolyX& p, const ResourceLimits& limits) {
    if (p.deg() < 1) throw PreconditionError("minimal polynomial must have positive X-degree");
    AlgebraicPoint x;
    x.minpoly = primitive_normalize(p);
    x.D = x.minpoly.deg();
    auto [sep, pi] = inseparable_split(x.minpoly);
    x.D_sep = sep;
    x.D_pi = pi;
    if (pi > 1) {
        // coefficients all in F_q[T^p] means P is a p-th power in A[X]
        const std::size_t p_char = x.field()->p();
        bool pth_power = true;
        for (const APoly& c : x.minpoly.coeffs())
            for (std::size_t i = 0; i < c.size() && pth_power; ++i)
                if (c.coeff(i) != 0 && i % p_char != 0) pth_power = false;
        if (pth_power) throw PreconditionError("minimal polynomial is a p-th power");
    }
    APolyX core = deflate(x.minpoly, static_cast<std::size_t>(pi));
    if (core.deg() >= 1) {
        APoly disc = resultant(core, core.derivative(x.field()), limits);
        if (disc.is_zero()) throw PreconditionError("minimal polynomial is not squarefree after deflation");
    }
    return x;
}

AlgebraicPoint AlgebraicPoint::rational(const RationalFn& x0) {
    const FieldPtr& f = x0.field();
    if (!f) throw PreconditionError("rational point without a field");
    return from_minpoly(APolyX(std::vector<APoly>{-x0.num(), x0.den()}));
}

long long projective_height(const std::vector<RationalFn>& coords) {
    KPolyX v(coords);
    if (v.is_zero()) throw PreconditionError("height of the zero vector");
    return projective_height(clear_denominators(v).first);
}

long long projective_height(const APolyX& coeffs) {
    if (coeffs.is_zero()) throw PreconditionError("height of the zero vector");
    APoly g = content(coeffs);
    long long m = 0;
    for (const APoly& c : coeffs.coeffs())
        if (!c.is_zero()) m = std::max(m, c.deg() - g.deg());
    return m;
}

Rational point_height(const AlgebraicPoint& x) { return make_rational(projective_height(x.minpoly), x.D); }

long long module_height(const DrinfeldModule& phi) {
    std::vector<RationalFn> coords{RationalFn(APoly::one(phi.field()))};
    coords.insert(coords.end(), phi.coeffs().begin(), phi.coeffs().end());
    return projective_height(coords);
}

Rational gamma_bound(const DrinfeldModule& phi) { return make_rational(2 * (phi.rank() + 1) * module_height(phi), 1); }

KPolyX phi_apply_at(const AlgebraicPoint& x, const DrinfeldModule& phi, const APoly& a) {
    QuotientAlgebra alg(x.minpoly);
    return phi.phi_apply(alg, a, alg.generator());
}

APolyX image_charpoly(const AlgebraicPoint& x, const DrinfeldModule& phi, const APoly& a, const ResourceLimits& limits) {
    if (a.is_zero()) throw PreconditionError("image under Phi(0) is not a point");
    const FieldPtr& f = phi.field();
    KPolyX r = phi_apply_at(x, phi, a);
    auto [s, delta] = clear_denominators(r);
    if (r.is_zero()) delta = APoly::one(f);
    std::vector<APolyX> g;
    g.reserve(std::max<std::size_t>(s.size(), 1));
    g.push_back(APolyX(std::vector<APoly>{-s.coeff(0), delta}));
    for (std::size_t j = 1; j < s.size(); ++j) g.push_back(s.coeffs()[j].is_zero() ? APolyX() : APolyX::constant(-s.coeffs()[j]));
    APolyX res = resultant(lift_constants(x.minpoly), APolyXY(std::move(g)), limits);
    return primitive_normalize(res);
}

Rational charpoly_height(const APolyX& c) { return make_rational(projective_height(c), c.deg()); }

Rational image_height(const AlgebraicPoint& x, const DrinfeldModule& phi, const APoly& a, const ResourceLimits& limits) {
    return charpoly_height(image_charpoly(x, phi, a, limits));
}

HeightInterval canonical_height(const AlgebraicPoint& x, const DrinfeldModule& phi, unsigned n, const ResourceLimits& limits) {
    const Integer scale = q_power(phi, static_cast<unsigned long>(phi.rank()) * n);
    const Rational gamma = gamma_bound(phi);
    // h(Phi(T^n)x) <= q^{dn}(h(x) + gamma): refuse before expanding
    Rational predicted = Rational(scale) * (point_height(x) + gamma) * make_rational(static_cast<long>(x.D));
    if (predicted > make_rational(static_cast<long>(limits.max_coefficient_degree)))
        throw ResourceLimitError("depth " + std::to_string(n) + " predicts T-degree " + to_string(floor(predicted)) +
                                 " above the ceiling " + std::to_string(limits.max_coefficient_degree));
    APoly tn = APoly::monomial(phi.field(), 1, n);
    HeightInterval out;
    out.n = n;
    out.estimate = image_height(x, phi, tn, limits) / Rational(scale);
    out.error = gamma / Rational(scale);
    return out;
}

std::string to_string(TorsionResult::Kind kind) {
    switch (kind) {
        case TorsionResult::Kind::Torsion:
            return "Torsion";
        case TorsionResult::Kind::NonTorsionCertified:
            return "NonTorsionCertified";
        default:
            return "Unknown";
    }
}

TorsionResult torsion_status(const AlgebraicPoint& x, const DrinfeldModule& phi, unsigned search_deg, unsigned depth,
                             const ResourceLimits& limits) {
    if (search_deg < 1) throw PreconditionError("torsion search degree must be >= 1");
    const FieldPtr& f = phi.field();
    QuotientAlgebra alg(x.minpoly);
    // v_i = Phi(T^i)(x); a linear relation sum c_i v_i = 0 gives Phi(sum c_i T^i)(x) = 0
    std::vector<KPolyX> orbit{alg.generator()};
    for (unsigned i = 1; i <= search_deg; ++i) {
        Integer predicted = q_power(phi, static_cast<unsigned long>(phi.rank()) * i);
        if (predicted * static_cast<long>(projective_height(x.minpoly) + 1) > static_cast<long>(limits.max_coefficient_degree))
            throw ResourceLimitError("torsion search degree " + std::to_string(search_deg) + " exceeds the degree ceiling");
        orbit.push_back(phi.phi_apply(alg, APoly::T(f), orbit.back()));
    }
    std::vector<RationalFn> all;
    for (const KPolyX& v : orbit)
        for (std::size_t j = 0; j < static_cast<std::size_t>(x.D); ++j) all.push_back(v.coeff(j));
    auto [cleared, delta] = clear_denominators(KPolyX(all));
    (void)delta;
    std::size_t width = static_cast<std::size_t>(std::max<long long>(max_t_degree(cleared), 0)) + 1;
    const std::size_t dim = static_cast<std::size_t>(x.D);

    // incremental elimination: rows hold (reduced vector, combination of v's)
    struct Row {
        std::vector<Fq> vec;
        std::vector<Fq> combo;
        std::size_t pivot;
    };
    std::vector<Row> basis;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        std::vector<APoly> entries;
        for (std::size_t j = 0; j < dim; ++j) entries.push_back(cleared.coeff(i * dim + j));
        std::vector<Fq> vec = flatten(entries, width);
        std::vector<Fq> combo(orbit.size(), 0);
        combo[i] = 1;
        for (const Row& b : basis) {
            Fq c = vec[b.pivot];
            if (c == 0) continue;
            for (std::size_t k = 0; k < vec.size(); ++k) vec[k] = f->sub(vec[k], f->mul(c, b.vec[k]));
            for (std::size_t k = 0; k < combo.size(); ++k) combo[k] = f->sub(combo[k], f->mul(c, b.combo[k]));
        }
        auto nz = std::find_if(vec.begin(), vec.end(), [](Fq c) { return c != 0; });
        if (nz == vec.end()) {
            TorsionResult out;
            out.kind = TorsionResult::Kind::Torsion;
            out.witness = APoly(f, std::vector<Fq>(combo.begin(), combo.begin() + static_cast<long>(i) + 1));
            return out;
        }
        std::size_t pivot = static_cast<std::size_t>(nz - vec.begin());
        Fq inv = f->inv(vec[pivot]);
        for (Fq& c : vec) c = f->mul(c, inv);
        for (Fq& c : combo) c = f->mul(c, inv);
        basis.push_back({std::move(vec), std::move(combo), pivot});
    }
    TorsionResult out;
    out.interval = canonical_height(x, phi, depth, limits);
    out.kind = out.interval->lower() > 0 ? TorsionResult::Kind::NonTorsionCertified : TorsionResult::Kind::Unknown;
    return out;
}

namespace {

// primitive, normalized polynomials of X-degree deg with coefficient T-degree <= m
std::vector<APolyX> primitive_polys(const FieldPtr& field, unsigned deg, unsigned m, const ResourceLimits& limits) {
    const std::uint64_t q = field->q();
    Integer per = ipow(Integer(static_cast<unsigned long>(q)), m + 1);
    Integer total = ipow(per, deg + 1);
    if (total > Integer(std::to_string(limits.max_enumeration)))
        throw ResourceLimitError("enumeration of " + to_string(total) + " candidates exceeds the ceiling " +
                                 std::to_string(limits.max_enumeration));
    const std::uint64_t per_n = per.get_ui();
    const std::uint64_t total_n = total.get_ui();
    std::vector<APoly> elems;
    elems.reserve(per_n);
    for (std::uint64_t idx = 0; idx < per_n; ++idx) {
        std::vector<Fq> c(m + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i <= m; ++i) {
            c[i] = static_cast<Fq>(v % q);
            v /= q;
        }
        elems.emplace_back(field, std::move(c));
    }
    std::vector<APolyX> out;
    for (std::uint64_t idx = 0; idx < total_n; ++idx) {
        std::uint64_t v = idx;
        std::vector<APoly> coeffs(deg + 1);
        for (unsigned i = 0; i <= deg; ++i) {
            coeffs[i] = elems[v % per_n];
            v /= per_n;
        }
        if (coeffs[deg].is_zero() || coeffs[deg].leading() != 1) continue;
        APolyX p(std::move(coeffs));
        if (!content(p).is_one()) continue;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::vector<Fq>> key_of(const APolyX& p) {
    std::vector<std::vector<Fq>> k;
    for (const APoly& c : p.coeffs()) k.push_back(c.coeffs());
    return k;
}

}  // namespace

std::vector<AlgebraicPoint> northcott_enumerate(const FieldPtr& field, unsigned d_max, unsigned chi, const ResourceLimits& limits) {
    if (d_max < 1 || chi < 1) throw PreconditionError("northcott enumeration needs D_max, chi >= 1");
    const unsigned m_max = d_max * chi;
    // all primitive candidates per degree up to the largest coefficient degree any factor may need
    std::vector<std::vector<APolyX>> by_degree(d_max + 1);
    for (unsigned deg = 1; deg <= d_max; ++deg) by_degree[deg] = primitive_polys(field, deg, m_max, limits);
    std::vector<AlgebraicPoint> points;
    std::set<std::vector<std::vector<Fq>>> reducible;
    for (unsigned deg = 1; deg <= d_max; ++deg) {
        // products of lower-degree factors; T-degrees add under multiplication by Gauss's lemma
        for (unsigned d1 = 1; 2 * d1 <= deg; ++d1) {
            for (const APolyX& a : by_degree[d1]) {
                for (const APolyX& b : by_degree[deg - d1]) {
                    if (max_t_degree(a) + max_t_degree(b) > static_cast<long long>(m_max)) continue;
                    reducible.insert(key_of(a * b));
                }
            }
        }
        for (const APolyX& p : by_degree[deg]) {
            if (max_t_degree(p) > static_cast<long long>(deg * chi)) continue;
            if (reducible.count(key_of(p))) continue;
            points.push_back(AlgebraicPoint::from_minpoly(p, limits));
        }
    }
    return points;
}

Rational vector_height(const AlgebraicPoint& x, const std::vector<KPolyX>& coords, bool affine, const ResourceLimits& limits) {
    const FieldPtr field = x.field();
    std::vector<KPolyX> all;
    if (affine) all.push_back(KPolyX::constant(RationalFn(APoly::one(field))));
    all.insert(all.end(), coords.begin(), coords.end());
    // generic linear form sum c_i(Y) S^i; its norm's S-coefficients have height D*h
    std::vector<RationalFn> flat;
    std::size_t ydeg = 0;
    for (const KPolyX& c : all) ydeg = std::max(ydeg, c.size());
    if (ydeg == 0) throw PreconditionError("height of the zero vector");
    for (const KPolyX& c : all)
        for (std::size_t j = 0; j < ydeg; ++j) flat.push_back(c.coeff(j));
    auto [cleared, delta] = clear_denominators(KPolyX(flat));
    (void)delta;
    std::vector<APolyX> by_y(ydeg);
    for (std::size_t j = 0; j < ydeg; ++j) {
        std::vector<APoly> in_s(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) in_s[i] = cleared.coeff(i * ydeg + j);
        by_y[j] = APolyX(std::move(in_s));
    }
    APolyX norm = resultant(lift_constants(x.minpoly), APolyXY(std::move(by_y)), limits);
    if (norm.is_zero()) throw ContractViolation("norm of a nonzero linear form vanished");
    return make_rational(projective_height(norm), x.D);
}

Rational local_height(const AlgebraicPoint& x, const APoly& l) {
    long long lead = APoly::valuation(x.minpoly.leading(), l);
    long long lowest = lead;
    for (const APoly& b : x.minpoly.coeffs())
        if (!b.is_zero()) lowest = std::min(lowest, APoly::valuation(b, l));
    return make_rational((lead - lowest) * l.deg(), x.D);
}

}  // namespace drinfeld
