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

#include "oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const Poly& a) { return static_cast<int>(trim(a).size()) - 1; }

Poly add(const Poly& a, const Poly& b, int p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
    return trim(out);
}

Poly sub(const Poly& a, const Poly& b, int p) {
    Poly nb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) nb[i] = (p - b[i] % p) % p;
    return add(a, nb, p);
}

Poly mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return trim(out);
}

int inv(int a, int p) {
    a %= p;
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::domain_error("no inverse");
}

Poly mod(Poly a, const Poly& m, int p) {
    a = trim(a);
    const Poly mm = trim(m);
    const int dm = static_cast<int>(mm.size()) - 1;
    const int lead_inv = inv(mm.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int f = a.back() * lead_inv % p;
        for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - f * mm[i]) % p + p) % p;
        a = trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b, int p) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = b;
        b = r;
    }
    if (a.empty()) return a;
    const int li = inv(a.back(), p);
    for (int& c : a) c = c * li % p;
    return a;
}

int eval(const Poly& a, int x, int p) {
    int acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p;
    return acc;
}

std::vector<Poly> monic_polys(int p, int n) {
    std::vector<Poly> out;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
        Poly f(n + 1, 0);
        long long v = idx;
        for (int i = 0; i < n; ++i) {
            f[i] = static_cast<int>(v % p);
            v /= p;
        }
        f[n] = 1;
        out.push_back(f);
    }
    return out;
}

std::vector<Poly> irreducibles_by_sieve(int p, int n) {
    std::set<Poly> reducible;
    for (int a = 1; a <= n / 2; ++a)
        for (const Poly& f : monic_polys(p, a))
            for (const Poly& g : monic_polys(p, n - a)) reducible.insert(mul(f, g, p));
    std::vector<Poly> out;
    for (const Poly& f : monic_polys(p, n))
        if (!reducible.count(f)) out.push_back(f);
    return out;
}

bool is_irreducible_by_trial_division(const Poly& f, int p) {
    const int n = degree(f);
    if (n < 1) return false;
    for (int a = 1; a <= n / 2; ++a)
        for (const Poly& g : monic_polys(p, a))
            if (mod(f, g, p).empty()) return false;
    return true;
}

int resultant(Poly f, Poly g, int p) {
    f = trim(f);
    g = trim(g);
    if (f.empty() || g.empty()) return 0;
    long long res = 1;
    while (true) {
        const int df = degree(f), dg = degree(g);
        if (dg == 0) {
            long long v = 1;
            for (int i = 0; i < df; ++i) v = v * g[0] % p;
            return static_cast<int>(res * v % p);
        }
        if (df < dg) {
            if ((df * dg) % 2 == 1) res = (p - res) % p;
            std::swap(f, g);
            continue;
        }
        // Res(f, g) = (-1)^{df dg} lc(g)^{df - dr} Res(g, r) with r = f mod g
        Poly r = mod(f, g, p);
        if (r.empty()) return 0;
        const int dr = degree(r);
        long long v = 1;
        for (int i = 0; i < df - dr; ++i) v = v * g.back() % p;
        res = res * v % p;
        if ((df * dg) % 2 == 1) res = (p - res) % p;
        f = g;
        g = r;
    }
}

int binomial_pascal(int n, int k, int p) {
    if (k < 0 || k > n) return 0;
    std::vector<int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<int> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) % p;
        row = next;
    }
    return row[k] % p;
}

namespace {

using Twisted = std::vector<Poly>;  // coefficients are residues mod l

Poly frob(const Poly& c, int times, const Poly& l, int p) {
    Poly out = c;
    for (int t = 0; t < times; ++t) {
        Poly acc{1};
        for (int i = 0; i < p; ++i) acc = mod(mul(acc, out, p), l, p);
        out = acc;
    }
    return out;
}

Twisted compose(const Twisted& f, const Twisted& g, const Poly& l, int p) {
    if (f.empty() || g.empty()) return {};
    Twisted out(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = mod(add(out[i + j], mul(f[i], frob(g[j], static_cast<int>(i), l, p), p), p), l, p);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

}  // namespace

bool is_supersingular_naive(const std::vector<Poly>& phi, const Poly& l, int p) {
    Twisted phi_t;
    for (const Poly& c : phi) phi_t.push_back(mod(c, l, p));
    Twisted result;
    Twisted power{{1}};
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (l[j] != 0) {
            Twisted term = power;
            for (Poly& c : term) c = mod(mul(c, Poly{l[j]}, p), l, p);
            Twisted sum(std::max(result.size(), term.size()));
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] = add(i < result.size() ? result[i] : Poly{}, i < term.size() ? term[i] : Poly{}, p);
            while (!sum.empty() && sum.back().empty()) sum.pop_back();
            result = sum;
        }
        power = compose(power, phi_t, l, p);
    }
    const std::size_t target = (phi.size() - 1) * static_cast<std::size_t>(degree(l));
    if (result.size() != target + 1) return false;
    for (std::size_t i = 0; i < target; ++i)
        if (!result[i].empty()) return false;
    return result[target] == Poly{1};
}

long long count_rational_points(int p, int chi) {
    std::set<std::pair<Poly, Poly>> seen;
    // all (a, b) with b monic, gcd 1, max(deg a, deg b) <= chi
    for (int db = 0; db <= chi; ++db)
        for (const Poly& b : monic_polys(p, db)) {
            for (int da = -1; da <= chi; ++da) {
                std::vector<Poly> as;
                if (da < 0) {
                    as.push_back({});
                } else {
                    for (const Poly& m : monic_polys(p, da))
                        for (int c = 1; c < p; ++c) {
                            Poly s = m;
                            for (int& v : s) v = v * c % p;
                            as.push_back(s);
                        }
                }
                for (const Poly& a : as) {
                    if (a.empty() && db != 0) continue;
                    if (!a.empty() && gcd(a, b, p) != Poly{1}) continue;
                    seen.insert({a, b});
                }
            }
        }
    return static_cast<long long>(seen.size());
}

}  // namespace oracle
