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

#ifndef DRINFELD_BOUNDS_HPP
#define DRINFELD_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "drinfeld/interval.hpp"
#include "drinfeld/numeric.hpp"

namespace drinfeld {

/// The quantity q^λ, with λ known exactly or inside a rigorous rational bracket.
struct LogQValue {
    Interval exponent;

    static LogQValue exact(const Rational& e) { return {Interval::point(e)}; }
    bool is_exact() const { return exponent.is_exact(); }
    /// Exact exponent; throws PreconditionError when only a bracket is known.
    const Rational& value() const;
    std::string to_string() const;

    friend LogQValue operator*(const LogQValue& a, const LogQValue& b) { return {a.exponent + b.exponent}; }
    friend LogQValue operator/(const LogQValue& a, const LogQValue& b) { return {a.exponent - b.exponent}; }
};

LogQValue min(const LogQValue& a, const LogQValue& b);

struct BoundInputs {
    std::uint64_t q = 2;
    unsigned d = 1;
    Rational h_phi = 1;
    Rational c_phi = 1;
    Rational r = 1;
    /// Remark-3 refinement: the RV* constant needs N_Φ explicitly.
    std::optional<Integer> n_phi;
    unsigned bits = 96;
};

struct ConstantsSet {
    int theorem = 1;
    BoundInputs in;
    Rational alpha;
    Rational c0_coefficient;  // 6500 dα³ or 35000 dα³
    Rational c0_q_exponent;   // d + rα
    Interval c0;
    LogQValue log_c0;
    LogQValue C0_first;
    LogQValue C0_second;
    LogQValue C0;
    Rational kappa;
    Rational mu;
    std::optional<Rational> lambda;
    Integer c4;
    Rational c3;
    LogQValue c2;
    std::optional<LogQValue> C_rv_star;
    std::string C_rv_star_symbolic;
};

ConstantsSet theorem1_constants(const BoundInputs& in);
ConstantsSet theorem2_constants(const BoundInputs& in);
ConstantsSet theorem_constants(int theorem, const BoundInputs& in);

/// The right-hand side of the theorem's lower bound for ĥ(x) in log_q form.
LogQValue lower_bound(const Integer& D, const Integer& D_pi, const ConstantsSet& c);

struct ParameterSet {
    Integer L;
    Integer t;
    Integer h_order;
    Integer deg_l;
    Integer deg_N;
    /// 1 for the separable variant, p^{e'} otherwise.
    Integer p_e;
    bool inseparable() const { return p_e != 1; }
};

ParameterSet parameter_select(const Integer& D, const ConstantsSet& c, const Integer& p_e = 1);

LogQValue northcott_bound(const Integer& D, const Integer& chi);
LogQValue c2_bound(unsigned d, const Rational& h_phi, const Rational& c_phi, const Integer& D);

/// max{cΦ, q^d, 384rq^d, 1536rq^d, 2q} <= 6500dα³q^{d+rα}.
bool c0_dominates(const BoundInputs& in);

}  // namespace drinfeld

#endif
