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

#include "drinfeld/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "drinfeld/bounds.hpp"
#include "drinfeld/config.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/supersingular.hpp"
#include "drinfeld/transcendence.hpp"

namespace drinfeld {

namespace {

std::string rat(const Rational& r) { return to_string(r); }

Json logq_json(const LogQValue& v) {
    Json j;
    j["exact"] = v.is_exact();
    if (v.is_exact()) {
        j["log_q"] = to_string(v.exponent.lo);
    } else {
        j["log_q_lo"] = to_string(v.exponent.lo);
        j["log_q_hi"] = to_string(v.exponent.hi);
    }
    j["log_q_decimal"] = to_decimal(v.exponent.lo);
    return j;
}

Json interval_json(const Interval& v) {
    if (v.is_exact()) return Json(to_string(v.lo));
    return Json{{"lo", to_string(v.lo)}, {"hi", to_string(v.hi)}};
}

std::string json_scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::vector<std::string> collect_columns(const std::vector<Json>& rows) {
    std::vector<std::string> cols;
    for (const Json& row : rows)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    return cols;
}

std::string apolys_text(const std::vector<APoly>& v) {
    std::string s;
    for (const APoly& a : v) s += (s.empty() ? "" : ", ") + a.to_string();
    return s;
}

Json apoly_list(const std::vector<APoly>& v) {
    Json out = Json::array();
    for (const APoly& a : v) out.push_back(a.to_string());
    return out;
}

Json height_interval_json(const HeightInterval& h) {
    return Json{{"depth", h.n},
                {"estimate", rat(h.estimate)},
                {"error", rat(h.error)},
                {"lower", rat(h.lower())},
                {"upper", rat(h.upper())},
                {"lower_decimal", to_decimal(h.lower())},
                {"upper_decimal", to_decimal(h.upper())}};
}

FieldPtr resolve_field(const std::string& module_spec, std::uint64_t q) {
    if (!module_spec.empty()) return load_module(module_spec).field();
    return FqField::of_order(q);
}

AlgebraicPoint resolve_point(const std::string& spec, const FieldPtr& field, const ResourceLimits& limits) {
    if (spec.empty()) throw PreconditionError("--point is required");
    return AlgebraicPoint::from_minpoly(load_point(spec, field), limits);
}

Json point_json(const AlgebraicPoint& x) {
    return Json{{"minpoly", to_string(x.minpoly)}, {"D", x.D}, {"D_sep", x.D_sep}, {"D_pi", x.D_pi}};
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

DensityConfig density_config(unsigned n_max, const std::string& r, const std::string& c1, unsigned eta) {
    DensityConfig cfg;
    cfg.n_max = n_max;
    cfg.r = parse_rational(r);
    cfg.c1 = parse_rational(c1);
    cfg.eta = eta;
    if (cfg.n_max < 1) throw PreconditionError("--n-max must be >= 1");
    if (cfg.r <= 0 || cfg.r > 1) throw PreconditionError("--r must satisfy 0 < r <= 1");
    if (cfg.c1 <= 0) throw PreconditionError("--c1 must be positive");
    if (cfg.eta < 1) throw PreconditionError("--eta must be >= 1");
    return cfg;
}

struct Common {
    std::string format;
    bool json = false;
    std::string out;
    std::string module;
    std::string point;
    std::uint64_t q = 2;
    unsigned workers = 1;
    ResourceLimits limits;
};

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "jsonl") return OutputFormat::Jsonl;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "pretty") return OutputFormat::Pretty;
    throw PreconditionError("unknown output format '" + name + "' (json, jsonl, csv, pretty)");
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char ch : value) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string render(const Report& report, OutputFormat format) {
    std::ostringstream os;
    const std::vector<Json> records = report.rows.empty() ? std::vector<Json>{report.summary} : report.rows;
    switch (format) {
    case OutputFormat::Json: {
        Json doc = Json{{"command", report.command}};
        for (auto it = report.summary.begin(); it != report.summary.end(); ++it) doc[it.key()] = it.value();
        if (!report.rows.empty()) doc["rows"] = report.rows;
        os << doc.dump(2) << "\n";
        break;
    }
    case OutputFormat::Jsonl:
        for (const Json& r : records) os << r.dump() << "\n";
        break;
    case OutputFormat::Csv: {
        const std::vector<std::string> cols = collect_columns(records);
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
        os << "\r\n";
        for (const Json& r : records) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                os << (i ? "," : "") << csv_field(r.contains(cols[i]) ? json_scalar_text(r[cols[i]]) : "");
            os << "\r\n";
        }
        break;
    }
    case OutputFormat::Pretty:
        os << report.command << "\n";
        for (auto it = report.summary.begin(); it != report.summary.end(); ++it)
            os << "  " << it.key() << ": " << json_scalar_text(it.value()) << "\n";
        for (const Json& r : report.rows) {
            os << " ";
            for (auto it = r.begin(); it != r.end(); ++it) os << " " << it.key() << "=" << json_scalar_text(it.value());
            os << "\n";
        }
        break;
    }
    return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic of Drinfeld modules over F_q(T): heights, supersingular census, auxiliary polynomials, bounds"};
    app.require_subcommand(1);
    Common c;
    std::string default_format = "json";
    std::function<Report()> action;

    auto common = [&](CLI::App* sub, bool module, bool point) {
        sub->add_option("--format", c.format, "json | jsonl | csv | pretty");
        sub->add_flag("--json", c.json, "Shorthand for --format json");
        sub->add_option("--out", c.out, "Write the report to this file");
        sub->add_option("--max-degree", c.limits.max_coefficient_degree, "Ceiling on intermediate T-degrees");
        sub->add_option("--max-sylvester", c.limits.max_sylvester_dim, "Ceiling on resultant matrix dimension");
        sub->add_option("--max-enumeration", c.limits.max_enumeration, "Ceiling on enumerated candidates");
        if (module) sub->add_option("--module", c.module, "Module file or carlitz(q=Q)");
        if (point) sub->add_option("--point", c.point, "Point file or inline minimal polynomial in X, T");
    };

    // height
    auto* height = app.add_subcommand("height", "Weil height of an algebraic point");
    common(height, true, true);
    height->add_option("--q", c.q, "Field order when no module is given");
    height->callback([&] {
        action = [&] {
            const FieldPtr field = resolve_field(c.module, c.q);
            const AlgebraicPoint x = resolve_point(c.point, field, c.limits);
            Report r;
            r.command = "height";
            r.summary = point_json(x);
            const Rational h = point_height(x);
            r.summary["height"] = rat(h);
            r.summary["height_decimal"] = to_decimal(h);
            return r;
        };
    });

    // canonical-height
    unsigned depth = 2;
    auto* canon = app.add_subcommand("canonical-height", "Canonical height with certified error interval");
    common(canon, true, true);
    canon->add_option("--depth", depth, "Iteration depth n (uses Phi(T^n))");
    canon->callback([&] {
        action = [&] {
            const DrinfeldModule phi = load_module(c.module.empty() ? "carlitz(q=2)" : c.module);
            const AlgebraicPoint x = resolve_point(c.point, phi.field(), c.limits);
            Report r;
            r.command = "canonical-height";
            r.summary = point_json(x);
            r.summary["module"] = phi.to_string();
            r.summary["height"] = rat(point_height(x));
            r.summary["gamma"] = rat(gamma_bound(phi));
            const Json interval = height_interval_json(canonical_height(x, phi, depth, c.limits));
            for (auto it = interval.begin(); it != interval.end(); ++it) r.summary[it.key()] = it.value();
            return r;
        };
    });

    // torsion
    unsigned search = 2;
    auto* torsion = app.add_subcommand("torsion", "Torsion witness search and non-torsion certification");
    common(torsion, true, true);
    torsion->add_option("--search", search, "Largest degree of a torsion witness to search");
    torsion->add_option("--depth", depth, "Canonical-height depth for certification");
    torsion->callback([&] {
        action = [&] {
            const DrinfeldModule phi = load_module(c.module.empty() ? "carlitz(q=2)" : c.module);
            const AlgebraicPoint x = resolve_point(c.point, phi.field(), c.limits);
            const TorsionResult t = torsion_status(x, phi, search, depth, c.limits);
            Report r;
            r.command = "torsion";
            r.summary = point_json(x);
            r.summary["module"] = phi.to_string();
            r.summary["status"] = to_string(t.kind);
            r.summary["witness"] = t.witness ? Json(t.witness->to_string()) : Json(nullptr);
            r.summary["interval"] = t.interval ? height_interval_json(*t.interval) : Json(nullptr);
            return r;
        };
    });

    // ss-scan
    unsigned n_max = 4, eta = 1;
    std::string r_text = "1", c1_text = "1/2";
    auto* ss = app.add_subcommand("ss-scan", "Supersingular census by degree against reference curves");
    common(ss, true, false);
    ss->add_option("--n-max", n_max, "Largest prime degree");
    ss->add_option("--r", r_text, "RV exponent r in (0, 1]");
    ss->add_option("--c1", c1_text, "RV constant c_1");
    ss->add_option("--eta", eta, "Only degrees N = 1 mod eta count");
    ss->add_option("--workers", c.workers, "Worker threads");
    ss->callback([&] {
        default_format = "jsonl";
        action = [&] {
            const DrinfeldModule phi = load_module(c.module.empty() ? "carlitz(q=2)" : c.module);
            const DensityConfig cfg = density_config(n_max, r_text, c1_text, eta);
            Report r;
            r.command = "ss-scan";
            r.summary = Json{{"module", phi.to_string()}, {"r", rat(cfg.r)}, {"c1", rat(cfg.c1)}, {"eta", cfg.eta}, {"n_max", cfg.n_max}};
            for (const DensityRow& row : density_report(phi, cfg, c.workers, c.limits)) {
                r.rows.push_back(Json{{"N", row.n},
                                      {"count_ss", row.count_ss},
                                      {"count_total", row.count_total},
                                      {"ratio", rat(row.ratio)},
                                      {"rv_curve", row.rv_curve_text},
                                      {"chebotarev_curve", rat(row.chebotarev_curve)},
                                      {"satisfied", row.satisfied},
                                      {"skipped_by_eta", row.skipped_by_eta}});
            }
            return r;
        };
    });

    // rv-report
    std::string l_text;
    auto* rv = app.add_subcommand("rv-report", "Per-prime supersingularity listing, or a single prime with --l");
    common(rv, true, false);
    rv->add_option("--n-max", n_max, "Largest prime degree");
    rv->add_option("--r", r_text, "RV exponent r in (0, 1]");
    rv->add_option("--c1", c1_text, "RV constant c_1");
    rv->add_option("--eta", eta, "Only degrees N = 1 mod eta count");
    rv->add_option("--workers", c.workers, "Worker threads");
    rv->add_option("--l", l_text, "Test this monic irreducible only");
    rv->callback([&] {
        action = [&] {
            const DrinfeldModule phi = load_module(c.module.empty() ? "carlitz(q=2)" : c.module);
            Report r;
            r.command = "rv-report";
            r.summary["module"] = phi.to_string();
            if (!l_text.empty()) {
                const APoly l = parse_apoly(l_text, phi.field());
                if (!l.is_monic() || !is_irreducible(l)) throw PreconditionError("--l must be monic irreducible");
                const bool good = good_reduction(phi, l);
                r.summary["l"] = l.to_string();
                r.summary["good_reduction"] = good;
                r.summary["supersingular"] = good ? Json(is_supersingular(phi, l)) : Json(nullptr);
                return r;
            }
            const DensityConfig cfg = density_config(n_max, r_text, c1_text, eta);
            bool all = true;
            for (unsigned n = 1; n <= cfg.n_max; ++n) {
                const ScanResult s = scan_degree(phi, n, c.workers, c.limits);
                const bool counted = (n % cfg.eta) == (1 % cfg.eta);
                const bool ok = rv_satisfied(s.count_ss, phi.q(), n, cfg.r, cfg.c1);
                if (counted) all = all && ok;
                r.rows.push_back(Json{{"N", n},
                                      {"count_ss", s.count_ss},
                                      {"count_total", s.count_total},
                                      {"satisfied", ok},
                                      {"skipped_by_eta", !counted},
                                      {"supersingular", apolys_text(s.supersingular)},
                                      {"bad_reduction", apolys_text(s.bad_reduction)}});
            }
            r.summary["rv_holds_on_range"] = all;
            return r;
        };
    });

    // aux-poly
    unsigned L = 2, t = 1, stride = 1, h_prime = 0;
    std::string ss_check;
    auto* aux = app.add_subcommand("aux-poly", "Auxiliary polynomial G_N with multiplicity and height checks");
    common(aux, true, true);
    aux->add_option("--L", L, "Degree bound in each variable")->check(CLI::PositiveNumber);
    aux->add_option("--t", t, "Required multiplicity")->check(CLI::PositiveNumber);
    aux->add_option("--stride", stride, "p^e' stride for the inseparable variant");
    aux->add_option("--check-ss-vanishing", ss_check, "l=POLY: evaluate the vanishing condition at l");
    aux->add_option("--h-prime", h_prime, "Derivative order h' for the vanishing check");
    aux->callback([&] {
        action = [&] {
            const DrinfeldModule phi = load_module(c.module.empty() ? "carlitz(q=2)" : c.module);
            const AlgebraicPoint x = resolve_point(c.point, phi.field(), c.limits);
            const AuxPolynomial a = build_aux_polynomial(phi, x, L, t, stride, c.limits);
            Report r;
            r.command = "aux-poly";
            r.summary = point_json(x);
            r.summary["module"] = phi.to_string();
            r.summary["L"] = L;
            r.summary["t"] = t;
            r.summary["stride"] = stride;
            r.summary["N"] = a.aux.N.to_string();
            r.summary["deg_N"] = a.aux.deg_n;
            Json p = Json::array();
            for (std::size_t k = 0; k < a.p.size(); ++k)
                p.push_back(Json{{"i", k / L}, {"j", k % L}, {"p", a.p[k].to_string()}});
            r.summary["p_ij"] = p;
            r.summary["G_N"] = to_string(a.g_n);
            r.summary["max_coefficient_degree"] = a.max_coefficient_degree;
            r.summary["coefficient_bound"] = a.coefficient_bound;
            r.summary["degree_bound"] = a.degree_bound;
            r.summary["multiplicity"] = a.multiplicity;
            Json rb = Json::array();
            for (const Rational& b : a.row_bounds) rb.push_back(rat(b));
            r.summary["row_height_bounds"] = rb;
            r.summary["row_heights"] = Json::array();
            for (const Rational& h : a.aux.system.row_heights) r.summary["row_heights"].push_back(rat(h));
            r.summary["row_bounds_hold"] = a.row_bounds_hold;
            r.summary["h_x"] = rat(a.h_x);
            r.summary["h_phi_N_x"] = rat(a.h_phi_n_x);
            if (!ss_check.empty()) {
                std::string text = ss_check;
                if (text.rfind("l=", 0) == 0) text = text.substr(2);
                const APoly l = parse_apoly(text, phi.field());
                const VanishingResult v = supersingular_vanishing_check(a, h_prime, phi, l, x, c.limits);
                r.summary["vanishing"] = Json{{"l", l.to_string()},
                                              {"h_prime", h_prime},
                                              {"zeta_is_zero", v.zeta_is_zero},
                                              {"zeta", v.zeta ? Json(v.zeta->to_string()) : Json(nullptr)},
                                              {"valuation", v.zeta_is_zero ? Json(nullptr) : Json(v.valuation)},
                                              {"required", v.required},
                                              {"holds", v.holds}};
            }
            return r;
        };
    });

    // siegel
    std::vector<std::string> rows_text;
    auto* siegel = app.add_subcommand("siegel", "Small nonzero solution of a linear system over k(x)");
    common(siegel, true, true);
    siegel->add_option("--q", c.q, "Field order when no module is given");
    siegel->add_option("--row", rows_text, "Comma-separated coefficients (polynomials in X over k), one flag per equation")
        ->required();
    siegel->callback([&] {
        action = [&] {
            const FieldPtr field = resolve_field(c.module, c.q);
            const AlgebraicPoint x = resolve_point(c.point, field, c.limits);
            std::vector<std::vector<KPolyX>> rows;
            for (const std::string& line : rows_text) {
                std::vector<KPolyX> row;
                for (const std::string& entry : split_commas(line)) row.push_back(parse_kpolyx(entry, field));
                rows.push_back(std::move(row));
            }
            const std::size_t n = rows.front().size();
            const SiegelSystem sys = make_siegel_system(x, std::move(rows), n, c.limits);
            const SiegelSolution sol = siegel_solve(sys);
            bool residual_zero = true;
            for (const KPolyX& res : siegel_residuals(sys, sol.values)) residual_zero = residual_zero && res.is_zero();
            Report r;
            r.command = "siegel";
            r.summary = point_json(x);
            r.summary["equations"] = sys.equations();
            r.summary["unknowns"] = sys.unknowns();
            r.summary["sigma"] = rat(sys.sigma);
            r.summary["bound"] = rat(sol.bound);
            r.summary["delta"] = sol.delta;
            r.summary["values"] = apoly_list(sol.values);
            long long max_deg = -1;
            for (const APoly& v : sol.values) max_deg = std::max<long long>(max_deg, v.deg());
            r.summary["max_degree"] = max_deg;
            r.summary["residual_zero"] = residual_zero;
            return r;
        };
    });

    // bounds
    BoundInputs in;
    std::string h_phi = "1", c_phi = "1", r_bound = "1", D_text, D_pi_text = "1", n_phi_text, p_e_text = "1";
    int theorem = 1;
    auto* bounds = app.add_subcommand("bounds", "Explicit constants, lower bound and parameters of the main theorems");
    common(bounds, false, false);
    bounds->add_option("--q", in.q, "Field order");
    bounds->add_option("--d", in.d, "Rank");
    bounds->add_option("--h-phi", h_phi, "Height h(Phi)");
    bounds->add_option("--c-phi", c_phi, "Degree c(Phi) of the coefficient field");
    bounds->add_option("--r", r_bound, "RV exponent r in (0, 1]");
    bounds->add_option("--theorem", theorem, "1 (separable) or 2 (general)");
    bounds->add_option("--D", D_text, "Degree D of the point");
    bounds->add_option("--D-pi", D_pi_text, "Purely inseparable degree");
    bounds->add_option("--n-phi", n_phi_text, "N_Phi for the RV* constant");
    bounds->add_option("--p-e", p_e_text, "p^e' for the inseparable parameter variant");
    bounds->add_option("--precision", in.bits, "Bits of log_q brackets");
    bounds->callback([&] {
        action = [&] {
            in.h_phi = parse_rational(h_phi);
            in.c_phi = parse_rational(c_phi);
            in.r = parse_rational(r_bound);
            if (!n_phi_text.empty()) in.n_phi = Integer(n_phi_text);
            const ConstantsSet k = theorem_constants(theorem, in);
            Report r;
            r.command = "bounds";
            Json& s = r.summary;
            s["theorem"] = theorem;
            s["q"] = in.q;
            s["d"] = in.d;
            s["h_phi"] = rat(in.h_phi);
            s["c_phi"] = rat(in.c_phi);
            s["r"] = rat(in.r);
            s["alpha"] = rat(k.alpha);
            s["c0"] = interval_json(k.c0);
            s["c0_formula"] = to_string(k.c0_coefficient) + "*q^(" + to_string(k.c0_q_exponent) + ")";
            s["log_q_c0"] = logq_json(k.log_c0);
            s["C0_first"] = logq_json(k.C0_first);
            s["C0_second"] = logq_json(k.C0_second);
            s["C0"] = logq_json(k.C0);
            s["kappa"] = rat(k.kappa);
            s["mu"] = rat(k.mu);
            s["lambda"] = k.lambda ? Json(rat(*k.lambda)) : Json(nullptr);
            s["c2"] = logq_json(k.c2);
            s["c3"] = rat(k.c3);
            s["c4"] = to_string(k.c4);
            s["C_rv_star"] = k.C_rv_star ? logq_json(*k.C_rv_star) : Json(k.C_rv_star_symbolic);
            if (!D_text.empty()) {
                const Integer D(D_text), D_pi(D_pi_text);
                s["D"] = D_text;
                s["D_pi"] = D_pi_text;
                s["lower_bound"] = logq_json(lower_bound(D, D_pi, k));
                s["c2_bound"] = logq_json(c2_bound(in.d, in.h_phi, in.c_phi, D));
                const Integer threshold = ipow(Integer(static_cast<unsigned long>(in.q)), in.q + in.d + 1);
                if (D >= threshold) {
                    const ParameterSet p = parameter_select(D, k, Integer(p_e_text));
                    s["parameters"] = Json{{"variant", p.inseparable() ? "inseparable" : "separable"},
                                           {"p_e", to_string(p.p_e)},
                                           {"L", to_string(p.L)},
                                           {"t", to_string(p.t)},
                                           {"h_order", to_string(p.h_order)},
                                           {"deg_l", to_string(p.deg_l)},
                                           {"deg_N", to_string(p.deg_N)}};
                } else {
                    s["parameters"] = nullptr;
                    s["parameters_note"] = "D below q^(q+d+1) = " + to_string(threshold);
                }
            }
            return r;
        };
    });

    // enumerate-points
    unsigned d_max = 1, chi = 1;
    bool list = false;
    auto* en = app.add_subcommand("enumerate-points", "Points of bounded degree and height (Northcott count)");
    common(en, true, false);
    en->add_option("--q", c.q, "Field order when no module is given");
    en->add_option("--D", d_max, "Largest degree")->check(CLI::PositiveNumber);
    en->add_option("--chi", chi, "Height bound")->check(CLI::PositiveNumber);
    en->add_flag("--list", list, "Emit every point as a row");
    en->callback([&] {
        action = [&] {
            const FieldPtr field = resolve_field(c.module, c.q);
            const std::vector<AlgebraicPoint> pts = northcott_enumerate(field, d_max, chi, c.limits);
            const LogQValue bound = northcott_bound(Integer(d_max), Integer(chi));
            Report r;
            r.command = "enumerate-points";
            r.summary = Json{{"q", field->q()}, {"D", d_max}, {"chi", chi}, {"count", pts.size()}, {"bound_log_q", rat(bound.value())}};
            r.summary["within_bound"] =
                Integer(static_cast<unsigned long>(pts.size())) <= ipow(Integer(static_cast<unsigned long>(field->q())), floor(bound.value()).get_ui());
            if (list)
                for (const AlgebraicPoint& x : pts) {
                    Json row = point_json(x);
                    row["height"] = rat(point_height(x));
                    r.rows.push_back(row);
                }
            return r;
        };
    });

    // count-irreducibles
    unsigned n_deg = 1;
    bool verify = false;
    auto* ci = app.add_subcommand("count-irreducibles", "Number of monic irreducibles of degree n over F_q");
    common(ci, false, false);
    ci->add_option("--q", c.q, "Field order");
    ci->add_option("--n", n_deg, "Degree")->check(CLI::PositiveNumber);
    ci->add_flag("--verify", verify, "Also count by exhaustive enumeration");
    ci->callback([&] {
        action = [&] {
            const Integer count = count_irreducibles(c.q, n_deg);
            const Integer qn = ipow(Integer(static_cast<unsigned long>(c.q)), n_deg);
            Report r;
            r.command = "count-irreducibles";
            r.summary = Json{{"q", c.q}, {"n", n_deg}, {"count", to_string(count)}};
            r.summary["lower"] = rat(make_rational(qn, Integer(2 * n_deg)));
            r.summary["upper"] = rat(make_rational(qn, Integer(n_deg)));
            if (verify) {
                const auto found = enumerate_irreducibles(FqField::of_order(c.q), n_deg);
                r.summary["enumerated"] = found.size();
                r.summary["agree"] = Integer(static_cast<unsigned long>(found.size())) == count;
            }
            return r;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        const OutputFormat fmt = parse_output_format(c.json ? "json" : (c.format.empty() ? default_format : c.format));
        const std::string text = render(action(), fmt);
        if (c.out.empty()) {
            out << text;
        } else {
            std::ofstream f(c.out, std::ios::binary);
            if (!f) throw PreconditionError("cannot open output file " + c.out);
            f << text;
        }
        return 0;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ContractViolation& e) {
        err << "internal contract violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace drinfeld
