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

#include "drinfeld/bounds.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

const unsigned kBracketSchedule[] = {96, 256, 1024, 4096};

void validate(const BoundInputs& in) {
    if (in.q < 2) throw PreconditionError("q must be >= 2");
    if (in.d < 1) throw PreconditionError("rank d must be >= 1");
    if (in.h_phi < 1) throw PreconditionError("h(Phi) must be >= 1");
    if (in.c_phi < 1) throw PreconditionError("c(Phi) must be >= 1");
    if (in.r <= 0 || in.r > 1) throw PreconditionError("r must satisfy 0 < r <= 1");
    if (in.n_phi && *in.n_phi < 1) throw PreconditionError("N_Phi must be >= 1");
}

Integer qz(const BoundInputs& in) { return Integer(static_cast<unsigned long>(in.q)); }

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return f;
    return n;
}

Interval c0_value(const ConstantsSet& c, unsigned bits) {
    return c.c0_coefficient * q_power_bracket(c.in.q, c.c0_q_exponent, bits);
}

Interval log_c0(const ConstantsSet& c, unsigned bits) {
    return log_q_bracket(c.c0_coefficient, c.in.q, bits) + Interval::point(c.c0_q_exponent);
}

}  // namespace

const Rational& LogQValue::value() const {
    if (!is_exact()) throw PreconditionError("log_q value known only as a bracket " + drinfeld::to_string(exponent));
    return exponent.lo;
}

std::string LogQValue::to_string() const { return "q^(" + drinfeld::to_string(exponent) + ")"; }

LogQValue min(const LogQValue& a, const LogQValue& b) { return {min(a.exponent, b.exponent)}; }

ConstantsSet theorem_constants(int theorem, const BoundInputs& in) {
    if (theorem != 1 && theorem != 2) throw PreconditionError("theorem must be 1 or 2");
    validate(in);
    ConstantsSet c;
    c.theorem = theorem;
    c.in = in;
    const Rational d(static_cast<unsigned long>(in.d));
    c.alpha = in.h_phi * in.c_phi;
    const Rational& a = c.alpha;
    c.c0_coefficient = Rational(theorem == 1 ? 6500 : 35000) * d * a * a * a;
    c.c0_q_exponent = d + in.r * a;
    c.c0 = c0_value(c, in.bits);
    c.log_c0 = {log_c0(c, in.bits)};

    c.c3 = 5 * d * (2 * (d + 1) * in.h_phi + 1);
    const Integer qq = qz(in);
    const Rational spread(ipow(qq, in.q + in.d + 1) - 1);
    c.C0_first = LogQValue::exact(-c.c3 * spread * spread * in.c_phi * in.c_phi);

    const Rational pre(theorem == 1 ? 768 : 384);
    const Rational c0_power = 1 + 4 * d * a / in.r;
    c.C0_second = {log_q_bracket(a / (pre * in.r), in.q, in.bits) - Interval::point(d) - c0_power * c.log_c0.exponent};
    c.C0 = min(c.C0_first, c.C0_second);

    c.mu = 2 + d * a / in.r;
    if (theorem == 1) {
        c.kappa = 1 + 2 * d * a / in.r;
    } else {
        c.kappa = 1 + 3 * d * a / in.r;
        c.lambda = 1 + 2 * d * a / in.r;
    }
    c.c4 = 24 * ipow(qq, in.d);
    c.c2 = LogQValue::exact(c.c3 * in.c_phi * in.c_phi);

    if (in.n_phi) {
        const Rational n1(*in.n_phi - 1);
        c.C_rv_star = min(LogQValue::exact(-c.c3 * n1 * n1 * in.c_phi * in.c_phi), c.C0_second);
    } else {
        c.C_rv_star_symbolic = "min{q^(-" + to_string(c.c3 * in.c_phi * in.c_phi) + "*(N_Phi-1)^2), " +
                               c.C0_second.to_string() + "}";
    }
    return c;
}

ConstantsSet theorem1_constants(const BoundInputs& in) { return theorem_constants(1, in); }
ConstantsSet theorem2_constants(const BoundInputs& in) { return theorem_constants(2, in); }

LogQValue lower_bound(const Integer& D, const Integer& D_pi, const ConstantsSet& c) {
    if (D < 1) throw PreconditionError("D must be >= 1");
    if (D_pi < 1 || D % D_pi != 0) throw PreconditionError("D_pi must divide D");
    const std::uint64_t p = smallest_prime_factor(c.in.q);
    Integer rest = D_pi;
    while (rest % p == 0) rest /= static_cast<unsigned long>(p);
    if (rest != 1) throw PreconditionError("D_pi must be a power of the characteristic");
    if (c.theorem == 1 && D_pi != 1) throw PreconditionError("theorem 1 applies to separable points (D_pi = 1)");
    if (c.theorem == 2 && D_pi == 1) throw PreconditionError("theorem 2 requires D_pi > 1");

    const unsigned bits = c.in.bits;
    const Interval log_d = log_q_bracket(Rational(D), c.in.q, bits);
    const Interval log_plus = max(log_d, Rational(1));
    const Interval loglog_plus = max(log_q_bracket(log_plus, c.in.q, bits), Rational(1));
    Interval e = c.C0.exponent + c.mu * log_q_bracket(loglog_plus, c.in.q, bits) - log_d -
                 c.kappa * log_q_bracket(log_plus, c.in.q, bits);
    if (c.lambda) e = e - *c.lambda * log_q_bracket(Rational(D_pi), c.in.q, bits);
    if (e.hi > 0) throw ContractViolation("lower bound exceeds 1: " + to_string(e));
    return {e};
}

ParameterSet parameter_select(const Integer& D, const ConstantsSet& c, const Integer& p_e) {
    const BoundInputs& in = c.in;
    const Integer threshold = ipow(qz(in), in.q + in.d + 1);
    if (D < threshold) throw PreconditionError("parameter selection needs D >= q^(q+d+1) = " + to_string(threshold));
    if (p_e < 1) throw PreconditionError("p^e' must be >= 1");
    const bool insep = p_e != 1;
    const Rational DD(D), P(p_e);

    for (unsigned bits : kBracketSchedule) {
        const Interval c0 = c0_value(c, bits);
        const Interval log_d = log_q_bracket(DD, in.q, bits);
        const Interval loglog = log_q_bracket(log_d, in.q, bits);
        const Interval ll2 = loglog * loglog;
        const Interval ll3 = ll2 * loglog;

        const Interval L_raw = P * ((c0 * c0) * Interval::point(DD) * log_d / ll2);
        const Interval t_raw = P * ((c0 * c0 * c0) * Interval::point(DD) * log_d / ll3);
        const Interval h_raw = (c0 * Interval::point(DD)) / ll2;
        const Interval l_arg = (4 * log_c0(c, bits) + Rational(insep ? 3 : 2) * log_q_bracket(log_d, in.q, bits) +
                                2 * log_q_bracket(P, in.q, bits) - log_q_bracket(loglog, in.q, bits));
        const Interval deg_raw = (1 / in.r) * l_arg;

        auto fL = common_floor(L_raw), ft = common_floor(t_raw), fh = common_floor(h_raw), fd = common_floor(deg_raw);
        if (!fL || !ft || !fh || !fd) continue;

        ParameterSet s;
        s.p_e = p_e;
        s.L = *fL + 1;
        s.t = *ft;
        s.h_order = *fh;
        s.deg_l = ceil(c.alpha * Rational(*fd));
        s.deg_N = Integer(static_cast<unsigned long>(floor_log(s.L, ipow(qz(in), in.d)) + 1));
        if (!(Rational(s.L * s.L) > Rational(s.t * D) * in.c_phi))
            throw ContractViolation("parameter invariant L^2 > t D c(Phi) failed");
        if (2 * s.h_order > s.t) throw ContractViolation("parameter invariant h <= t/2 failed");
        return s;
    }
    throw ResourceLimitError("could not resolve parameter floors at the maximum bracket precision");
}

LogQValue northcott_bound(const Integer& D, const Integer& chi) {
    if (D < 1 || chi < 1) throw PreconditionError("D and chi must be >= 1");
    return LogQValue::exact(Rational(5 * D * D * chi));
}

LogQValue c2_bound(unsigned d, const Rational& h_phi, const Rational& c_phi, const Integer& D) {
    if (d < 1 || h_phi < 1 || c_phi < 1 || D < 1) throw PreconditionError("c2 bound needs d, h, c, D >= 1");
    const Rational dd(static_cast<unsigned long>(d));
    const Rational c3 = 5 * dd * (2 * (dd + 1) * h_phi + 1);
    return LogQValue::exact(-c3 * c_phi * c_phi * Rational(D * D));
}

bool c0_dominates(const BoundInputs& in) {
    validate(in);
    ConstantsSet c = theorem1_constants(in);
    const Rational qd(ipow(qz(in), in.d));
    const Rational candidates[] = {in.c_phi, qd, 384 * in.r * qd, 1536 * in.r * qd, Rational(2 * qz(in))};
    for (const Rational& v : candidates)
        if (c.c0.lo < v) return false;
    return true;
}

}  // namespace drinfeld
