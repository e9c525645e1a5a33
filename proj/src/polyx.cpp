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

#include "drinfeld/polyx.hpp"

namespace drinfeld {

namespace {

template <class C>
std::string render(const UPoly<C>& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        const C& c = a.coeffs()[i];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (!c.is_one()) {
            bool compound = cs.find_first_of("+/") != std::string::npos || cs.find('*') != std::string::npos;
            out += (compound ? "(" + cs + ")" : cs) + "*";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace

FieldPtr field_of(const APolyX& a) {
    for (const APoly& c : a.coeffs())
        if (c.field()) return c.field();
    return nullptr;
}

FieldPtr field_of(const KPolyX& a) {
    for (const RationalFn& c : a.coeffs())
        if (c.field()) return c.field();
    return nullptr;
}

APoly content(const APolyX& a) {
    APoly g;
    for (const APoly& c : a.coeffs()) {
        g = APoly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

APolyX divide_coefficients(const APolyX& a, const APoly& c) {
    std::vector<APoly> out;
    out.reserve(a.size());
    for (const APoly& x : a.coeffs()) out.push_back(APoly::exact_div(x, c));
    return APolyX(std::move(out));
}

APolyX primitive_normalize(const APolyX& a) {
    if (a.is_zero()) return a;
    APoly g = content(a);
    APolyX out = g.is_one() ? a : divide_coefficients(a, g);
    Fq lead = out.leading().leading();
    if (lead != 1) out = scale_fq(out, out.leading().field()->inv(lead));
    return out;
}

long long max_t_degree(const APolyX& a) {
    long long m = -1;
    for (const APoly& c : a.coeffs()) m = std::max(m, c.deg());
    return m;
}

KPolyX to_k(const APolyX& a) {
    std::vector<RationalFn> out;
    out.reserve(a.size());
    for (const APoly& c : a.coeffs()) out.emplace_back(c);
    return KPolyX(std::move(out));
}

std::pair<APolyX, APoly> clear_denominators(const KPolyX& a) {
    FieldPtr f = field_of(a);
    if (!f) return {APolyX(), APoly()};
    APoly delta = APoly::one(f);
    for (const RationalFn& c : a.coeffs()) {
        if (c.is_zero() || c.den().is_one()) continue;
        APoly g = APoly::gcd(delta, c.den());
        delta = delta * APoly::exact_div(c.den(), g);
    }
    std::vector<APoly> out;
    out.reserve(a.size());
    for (const RationalFn& c : a.coeffs()) {
        if (c.is_zero()) {
            out.emplace_back(f);
            continue;
        }
        out.push_back(c.num() * APoly::exact_div(delta, c.den()));
    }
    return {APolyX(std::move(out)), delta};
}

std::pair<KPolyX, KPolyX> divmod(const KPolyX& a, const KPolyX& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (a.size() < b.size()) return {KPolyX(), a};
    std::vector<RationalFn> r = a.coeffs();
    std::vector<RationalFn> quo(a.size() - b.size() + 1);
    const std::size_t db = b.size() - 1;
    const RationalFn inv_lead = b.leading().inverse();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        RationalFn c = r[k] * inv_lead;
        for (std::size_t j = 0; j <= db; ++j) {
            if (!b.coeffs()[j].is_zero()) r[k - db + j] -= c * b.coeffs()[j];
        }
        quo[k - db] = std::move(c);
    }
    r.resize(db);
    return {KPolyX(std::move(quo)), KPolyX(std::move(r))};
}

std::string to_string(const APolyX& a, const std::string& var) { return render(a, var); }
std::string to_string(const KPolyX& a, const std::string& var) { return render(a, var); }

}  // namespace drinfeld
