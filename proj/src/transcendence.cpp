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

#include "drinfeld/transcendence.hpp"

#include <algorithm>

#include "drinfeld/supersingular.hpp"

namespace drinfeld {

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
    std::uint64_t result = 1;
    while (k > 0) {
        const std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < ki; ++i) {
            num = num * ((ni - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        // den^{p-2} is the inverse of den modulo p
        std::uint64_t inv = 1, base = den, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        result = result * num % p * inv % p;
        n /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(result);
}

long long multiplicity_at(const APolyX& b, const AlgebraicPoint& x) {
    if (b.is_zero()) throw PreconditionError("multiplicity of the zero polynomial");
    long long m = 0;
    APolyX cur = b;
    while (auto quo = try_exact_div(cur, x.minpoly)) {
        cur = std::move(*quo);
        ++m;
    }
    return m;
}

long long vanishing_derivative_count(const APolyX& b, const AlgebraicPoint& x) {
    if (b.is_zero()) throw PreconditionError("multiplicity of the zero polynomial");
    const FieldPtr field = x.field();
    long long h = 0;
    while (h <= b.deg()) {
        APolyX g = divided_derivative(b, static_cast<std::uint64_t>(h), field);
        if (!g.is_zero() && !try_exact_div(g, x.minpoly)) break;
        ++h;
    }
    return h;
}

Rational SiegelSystem::bound() const {
    const long long slack = static_cast<long long>(unknowns()) - static_cast<long long>(equations()) * point.D;
    return sigma * make_rational(static_cast<long>(point.D)) / make_rational(static_cast<long>(slack));
}

SiegelSystem make_siegel_system(const AlgebraicPoint& x, std::vector<std::vector<KPolyX>> rows, std::size_t unknowns,
                                const ResourceLimits& limits) {
    if (unknowns == 0) throw PreconditionError("Siegel system without unknowns");
    for (const auto& row : rows)
        if (row.size() != unknowns) throw PreconditionError("Siegel rows must all have N entries");
    if (static_cast<long long>(unknowns) <= static_cast<long long>(rows.size()) * x.D)
        throw PreconditionError("Siegel hypothesis N > M D violated");
    SiegelSystem sys;
    sys.point = x;
    sys.rows = std::move(rows);
    sys.columns = unknowns;
    sys.sigma = 0;
    const QuotientAlgebra alg(x.minpoly);
    for (auto& row : sys.rows) {
        for (KPolyX& e : row) {
            if (e.deg() >= x.D) e = alg.reduce(e);
        }
        Rational h = vector_height(x, row, true, limits);
        sys.row_heights.push_back(h);
        sys.sigma += h;
    }
    return sys;
}

namespace {

// reduced row echelon form over F_q; returns pivot column per row
std::vector<std::size_t> rref(std::vector<std::vector<Fq>>& m, std::size_t cols, const FqField& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const Fq inv = f.inv(m[r][c]);
        for (std::size_t k = c; k < cols; ++k) m[r][k] = f.mul(m[r][k], inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Fq factor = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

}  // namespace

SiegelSolution siegel_solve(const SiegelSystem& sys) {
    const FieldPtr field = sys.point.field();
    const std::size_t n = sys.unknowns();
    const std::size_t dim = static_cast<std::size_t>(sys.point.D);
    SiegelSolution out;
    out.bound = sys.bound();
    if (out.bound < 0) throw PreconditionError("Siegel bound is negative");
    out.delta = to_int64(floor(out.bound));
    const std::size_t width = static_cast<std::size_t>(out.delta) + 1;
    const std::size_t cols = n * width;
    std::vector<std::vector<Fq>> m;
    for (const auto& row : sys.rows) {
        for (std::size_t c = 0; c < dim; ++c) {
            std::vector<RationalFn> entries;
            for (const KPolyX& e : row) entries.push_back(e.coeff(c));
            auto [cleared, delta] = clear_denominators(KPolyX(entries));
            (void)delta;
            const long long top = max_t_degree(cleared);
            if (top < 0) continue;
            // coefficient of T^e in sum_i (sum_s u_{i,s} T^s) b_i
            for (long long e = 0; e <= top + out.delta; ++e) {
                std::vector<Fq> eq(cols, 0);
                bool any = false;
                for (std::size_t i = 0; i < n; ++i) {
                    const APoly b = cleared.coeff(i);
                    for (std::size_t s = 0; s < width; ++s) {
                        if (e < static_cast<long long>(s)) break;
                        Fq v = b.coeff(static_cast<std::size_t>(e) - s);
                        eq[i * width + s] = v;
                        any = any || v != 0;
                    }
                }
                if (any) m.push_back(std::move(eq));
            }
        }
    }
    std::vector<std::size_t> pivots = rref(m, cols, *field);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    if (free_col == cols) throw ContractViolation("Siegel kernel is empty at the lemma's degree bound");
    std::vector<Fq> u(cols, 0);
    u[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = field->neg(m[r][free_col]);
    for (std::size_t i = 0; i < n; ++i)
        out.values.emplace_back(field, std::vector<Fq>(u.begin() + static_cast<long>(i * width), u.begin() + static_cast<long>((i + 1) * width)));
    for (const KPolyX& r : siegel_residuals(sys, out.values))
        if (!r.is_zero()) throw ContractViolation("Siegel solution leaves a nonzero residual");
    return out;
}

std::vector<KPolyX> siegel_residuals(const SiegelSystem& sys, const std::vector<APoly>& values) {
    std::vector<KPolyX> out;
    for (const auto& row : sys.rows) {
        KPolyX acc;
        for (std::size_t i = 0; i < row.size() && i < values.size(); ++i) {
            if (!values[i].is_zero()) acc += row[i].scaled(RationalFn(values[i]));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

long long aux_deg_n(unsigned long L, unsigned d, std::uint32_t q) {
    if (L < 1) throw PreconditionError("L must be >= 1");
    long long m = 0;
    const Integer qd = ipow(Integer(static_cast<unsigned long>(q)), d);
    Integer power = qd;
    while (power <= L) {
        ++m;
        power *= qd;
    }
    return m + 1;
}

KPolyX phi_polynomial(const DrinfeldModule& phi, const APoly& a) {
    OrePoly<KField> f = phi.phi_image(a);
    std::vector<RationalFn> out;
    std::size_t exponent = 1;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) exponent *= phi.q();
        out.resize(exponent + 1);
        out[exponent] = f.coeffs()[i];
    }
    return KPolyX(std::move(out));
}

AuxSystem build_aux_system(const DrinfeldModule& phi, const AlgebraicPoint& x, unsigned L, unsigned t, const APoly& N,
                           unsigned stride, const ResourceLimits& limits) {
    if (L < 1) throw PreconditionError("L must be >= 1");
    if (stride < 1) throw PreconditionError("stride must be >= 1");
    if (static_cast<long long>(L) * L <= static_cast<long long>(t) * x.D)
        throw PreconditionError("hypothesis L^2 > t D violated");
    const long long expected = aux_deg_n(L, phi.rank(), phi.q());
    if (N.deg() != expected)
        throw PreconditionError("deg N must equal [(1/d) log_q L] + 1 = " + std::to_string(expected));
    const FieldPtr field = phi.field();
    AuxSystem out;
    out.N = N;
    out.deg_n = expected;
    out.L = L;
    out.t = t;
    out.stride = stride;
    const KPolyX phi_n = phi_polynomial(phi, N);
    std::vector<KPolyX> powers{KPolyX::constant(RationalFn(APoly::one(field)))};
    for (unsigned j = 1; j < L; ++j) powers.push_back(powers.back() * phi_n);
    for (unsigned i = 0; i < L; ++i)
        for (unsigned j = 0; j < L; ++j) out.monomials.push_back(powers[j].shifted(i));
    const QuotientAlgebra alg(x.minpoly);
    std::vector<std::vector<KPolyX>> rows;
    for (unsigned h = 0; h < t; ++h) {
        std::vector<KPolyX> row;
        row.reserve(out.monomials.size());
        for (const KPolyX& mono : out.monomials)
            row.push_back(alg.reduce(divided_derivative(mono, static_cast<std::uint64_t>(h) * stride, field)));
        rows.push_back(std::move(row));
    }
    out.system = make_siegel_system(x, std::move(rows), out.monomials.size(), limits);
    return out;
}

Rational row_height_bound(const Rational& L, const Rational& h_x, const Rational& h_phi_n_x, const Rational& deg_n,
                          const Rational& h_phi, const Rational& h_order) {
    return L * (h_x + h_phi_n_x) + deg_n * h_phi * h_order;
}

AuxPolynomial build_aux_polynomial(const DrinfeldModule& phi, const AlgebraicPoint& x, unsigned L, unsigned t, unsigned stride,
                                   const ResourceLimits& limits) {
    const long long deg_n = aux_deg_n(L, phi.rank(), phi.q());
    const APoly N = APoly::monomial(phi.field(), 1, static_cast<std::size_t>(deg_n));
    AuxPolynomial out;
    out.aux = build_aux_system(phi, x, L, t, N, stride, limits);
    SiegelSolution sol = siegel_solve(out.aux.system);
    out.p = sol.values;
    out.coefficient_bound = sol.delta;
    for (const APoly& c : out.p) out.max_coefficient_degree = std::max(out.max_coefficient_degree, c.deg());
    KPolyX g;
    for (std::size_t k = 0; k < out.p.size(); ++k)
        if (!out.p[k].is_zero()) g += out.aux.monomials[k].scaled(RationalFn(out.p[k]));
    if (g.is_zero()) throw ContractViolation("auxiliary polynomial G_N vanished identically");
    out.g_n = clear_denominators(g).first;
    const Integer qdn = ipow(Integer(static_cast<unsigned long>(phi.q())), static_cast<unsigned long>(phi.rank() * deg_n));
    out.degree_bound = to_int64(2 * (static_cast<long>(L) - 1) * qdn);
    if (out.g_n.deg() > out.degree_bound) throw ContractViolation("deg_X G_N exceeds 2(L-1)q^{d deg N}");
    if (out.max_coefficient_degree > out.coefficient_bound) throw ContractViolation("p_ij degree exceeds the Siegel bound");
    out.multiplicity = multiplicity_at(out.g_n, x);
    if (stride == 1 && out.multiplicity < static_cast<long long>(t))
        throw ContractViolation("G_N vanishes at x with multiplicity below t");
    out.h_x = point_height(x);
    out.h_phi_n_x = image_height(x, phi, N, limits);
    const Rational h_phi = make_rational(module_height(phi), 1);
    for (unsigned h = 0; h < t; ++h) {
        out.row_bounds.push_back(row_height_bound(make_rational(L, 1), out.h_x, out.h_phi_n_x, make_rational(deg_n, 1), h_phi,
                                                  make_rational(static_cast<long>(h) * stride, 1)));
        if (out.aux.system.row_heights[h] > out.row_bounds.back()) out.row_bounds_hold = false;
    }
    return out;
}

VanishingResult supersingular_vanishing_check(const AuxPolynomial& aux, unsigned h_prime, const DrinfeldModule& phi,
                                              const APoly& l, const AlgebraicPoint& x, const ResourceLimits& limits) {
    if (!is_supersingular(phi, l)) throw PreconditionError(l.to_string() + " is not a supersingular prime of the module");
    if (APoly::valuation(x.minpoly.leading(), l) != 0)
        throw PreconditionError("point is not integral at " + l.to_string() + " (leading coefficient divisible by l)");
    const FieldPtr field = phi.field();
    const QuotientAlgebra alg(x.minpoly);
    const KPolyX y = phi.phi_apply(alg, l, alg.generator());
    const KPolyX g = to_k(divided_derivative(aux.g_n, h_prime, field));
    KPolyX value;
    for (std::size_t i = g.size(); i-- > 0;) value = alg.add(alg.mul(value, y), KPolyX::constant(g.coeffs()[i]));
    VanishingResult out;
    out.required = std::max<long long>(0, static_cast<long long>(aux.aux.t) - static_cast<long long>(h_prime));
    if (value.is_zero()) {
        out.zeta_is_zero = true;
        out.holds = true;
        return out;
    }
    auto [s, delta] = clear_denominators(value);
    // N(g(x)) = Res(P, s) / (delta^D lc(P)^{deg s})
    APoly res = resultant(x.minpoly, s, limits);
    APoly den = APoly::pow(delta, static_cast<unsigned long>(x.D)) *
                APoly::pow(x.minpoly.leading(), static_cast<unsigned long>(std::max<long long>(s.deg(), 0)));
    RationalFn zeta(res, den);
    out.zeta = zeta;
    if (zeta.is_zero()) {
        out.zeta_is_zero = true;
        return out;
    }
    out.valuation = zeta.valuation(l);
    out.holds = out.valuation >= out.required;
    return out;
}

}  // namespace drinfeld
