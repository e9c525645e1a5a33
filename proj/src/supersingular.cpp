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

#include "drinfeld/supersingular.hpp"

#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace drinfeld {

bool good_reduction(const DrinfeldModule& phi, const APoly& l) {
    if (!l.is_monic() || !is_irreducible(l)) throw PreconditionError(l.to_string() + " is not a monic irreducible");
    return phi.good_reduction(l);
}

namespace {

bool supersingular_at(const DrinfeldModule& phi, const APoly& l) {
    if (!phi.good_reduction(l)) throw BadReductionError(l.to_string());
    auto ring = std::make_shared<const ResidueRing>(l, ResidueRing::TrustedIrreducible{});
    OrePoly<ResidueRing> image = phi.phi_image_in(ring, l);
    const std::size_t top = static_cast<std::size_t>(phi.rank()) * static_cast<std::size_t>(l.deg());
    if (image.deg() != static_cast<long long>(top)) return false;
    for (std::size_t i = 0; i < top; ++i)
        if (!image.coeffs()[i].is_zero()) return false;
    return image.coeffs()[top].is_one();
}

}  // namespace

bool is_supersingular(const DrinfeldModule& phi, const APoly& l) {
    if (l.is_zero() || !is_irreducible(l)) throw PreconditionError(l.to_string() + " is not irreducible");
    return supersingular_at(phi, l.monic());
}

ScanResult scan_degree(const DrinfeldModule& phi, unsigned n, unsigned workers, const ResourceLimits& limits) {
    Integer candidates = ipow(Integer(static_cast<unsigned long>(phi.q())), n);
    if (candidates > Integer(std::to_string(limits.max_enumeration)))
        throw ResourceLimitError("degree " + std::to_string(n) + " scan visits " + to_string(candidates) +
                                 " candidates, above the ceiling " + std::to_string(limits.max_enumeration));
    std::vector<APoly> primes = enumerate_irreducibles(phi.field(), n);
    // 0 = ordinary, 1 = supersingular, 2 = bad reduction
    std::vector<int> status(primes.size(), 0);
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < primes.size(); i += stride) {
            if (!phi.good_reduction(primes[i])) {
                status[i] = 2;
                continue;
            }
            status[i] = supersingular_at(phi, primes[i]) ? 1 : 0;
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    work(w, workers);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    ScanResult out;
    out.n = n;
    out.count_total = primes.size();
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (status[i] == 1) out.supersingular.push_back(primes[i]);
        if (status[i] == 2) out.bad_reduction.push_back(primes[i]);
    }
    out.count_ss = out.supersingular.size();
    return out;
}

bool rv_satisfied(std::size_t count, std::uint64_t q, unsigned n, const Rational& r, const Rational& c1) {
    if (count == 0) return false;
    // count * N / c1 >= q^{rN}  <=>  (count * N / c1)^b >= q^{aN} with r = a/b
    Rational lhs = Rational(Integer(std::to_string(count)) * n) / c1;
    const unsigned long a = r.get_num().get_ui();
    const unsigned long b = r.get_den().get_ui();
    Integer num = ipow(lhs.get_num(), b);
    Integer den = ipow(lhs.get_den(), b);
    return num >= den * ipow(Integer(static_cast<unsigned long>(q)), a * n);
}

std::vector<DensityRow> density_report(const DrinfeldModule& phi, const DensityConfig& config, unsigned workers,
                                       const ResourceLimits& limits) {
    if (config.n_max < 1) throw PreconditionError("n-max must be >= 1");
    if (config.r <= 0 || config.r > 1) throw PreconditionError("r must lie in (0, 1]");
    if (config.c1 <= 0) throw PreconditionError("c1 must be positive");
    if (config.eta < 1) throw PreconditionError("eta must be >= 1");
    const std::uint64_t q = phi.q();
    const Integer qz(static_cast<unsigned long>(q));
    std::vector<DensityRow> rows;
    for (unsigned n = 1; n <= config.n_max; ++n) {
        ScanResult scan = scan_degree(phi, n, workers, limits);
        DensityRow row;
        row.n = n;
        row.count_ss = scan.count_ss;
        row.count_total = scan.count_total;
        row.ratio = make_rational(static_cast<long>(scan.count_ss), static_cast<long>(scan.count_total));
        Rational rn = config.r * n;
        if (rn.get_den() == 1) {
            row.rv_curve = config.c1 * Rational(ipow(qz, rn.get_num().get_ui())) / n;
            row.rv_curve_text = to_string(row.rv_curve);
        } else {
            row.rv_curve_exact = false;
            double approx = std::pow(static_cast<double>(q), rn.get_d()) * config.c1.get_d() / n;
            row.rv_curve = Rational(approx);
            row.rv_curve_text = "~" + to_decimal(row.rv_curve);
        }
        row.chebotarev_curve = Rational(ipow(qz, n)) / (2 * phi.rank() * n);
        row.satisfied = rv_satisfied(scan.count_ss, q, n, config.r, config.c1);
        row.skipped_by_eta = (n % config.eta) != (1 % config.eta);
        row.bad_reduction = std::move(scan.bad_reduction);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace drinfeld
