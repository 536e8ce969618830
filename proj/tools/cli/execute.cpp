#include "execute.hpp"

#include "format.hpp"
#include "svg.hpp"

#include "epc/corridor/cascade.hpp"
#include "epc/corridor/design.hpp"
#include "epc/corridor/leading.hpp"
#include "epc/corridor/regions.hpp"
#include "epc/error.hpp"
#include "epc/models/es_model.hpp"
#include "epc/models/hamiltonians.hpp"
#include "epc/parallel.hpp"
#include "epc/spectra/pseudospectrum.hpp"
#include "epc/spectra/scaling.hpp"
#include "epc/spectra/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>

#ifndef EPC_VERSION
#define EPC_VERSION "0.0.0"
#endif

namespace epc::cli {

using nlohmann::ordered_json;

namespace {

struct Ctx {
    const RunConfig& cfg;
    RunReport& rep;
    int digits() const { return cfg.precision; }
    std::string dec(const Rational& x) const { return decimal(x, cfg.precision); }
    std::string dec(long double x) const {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.*Le", cfg.precision - 1, x);
        return buf;
    }
    ordered_json num(const Rational& x) const { return {{"exact", exact(x)}, {"decimal", dec(x)}}; }
};

ordered_json poly_json(const UniPoly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coefficients()) a.push_back(exact(c));
    return a;
}

std::string pos_key(const Position& p) { return std::to_string(p.first) + "," + std::to_string(p.second); }

PerturbationSpec spec_of(const RunConfig& cfg) {
    PerturbationSpec v;
    v.n = cfg.n;
    v.kind = cfg.model == ModelKind::Hierarchical ? PerturbationKind::Hierarchical : PerturbationKind::Bounded;
    v.entries = cfg.entries;
    return v;
}

ScaledMatrix matrix_of(const RunConfig& cfg) {
    if (cfg.model == ModelKind::EPLimit) return es_ep_limit(cfg.n);
    return build_hamiltonian({cfg.n, cfg.e0}, spec_of(cfg));
}

ScaleChoice scale_of(const RunConfig& cfg, int base) {
    if (cfg.s) return {*cfg.s, pow(*cfg.s, base), true};
    if (cfg.lambda) return scale_from_lambda(*cfg.lambda, base);
    return {Rational(1), Rational(1), true};
}

ordered_json eigen_json(const Ctx& c, const std::vector<ComplexRoot>& ev) {
    ordered_json a = ordered_json::array();
    for (const auto& e : ev)
        a.push_back({{"re", c.dec(e.re)}, {"im", c.dec(e.im)}, {"error_bound", c.dec(e.error_bound)},
                     {"multiplicity", e.multiplicity}});
    return a;
}

ordered_json scale_json(const Ctx& c, const ScaleChoice& sc) {
    return {{"lambda", c.num(sc.lambda)}, {"s", c.num(sc.s)}, {"lambda_is_exact_power", sc.exact}};
}

void cmd_classify(Ctx& c) {
    ScaledMatrix h = matrix_of(c.cfg);
    ScaleChoice sc = scale_of(c.cfg, h.scale_base());
    SpectrumOptions opts;
    opts.complex_digits = std::max(c.digits() + 5, 20);
    SpectrumReport r = classify_reality(h, sc.s, opts);
    CsvTable t({"index", "re", "im", "error_bound", "multiplicity"});
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
        const auto& e = r.eigenvalues[i];
        t.add_row({std::to_string(i + 1), c.dec(e.re), c.dec(e.im), c.dec(e.error_bound), std::to_string(e.multiplicity)});
    }
    c.rep.csv = t.str();
    c.rep.results = {{"scale", scale_json(c, sc)},
                     {"char_poly", poly_json(r.char_poly)},
                     {"real_count", r.real_count},
                     {"complex_pairs", r.complex_pairs},
                     {"verdict", to_string(r.verdict)},
                     {"eigenvalues", eigen_json(c, r.eigenvalues)}};
}

void cmd_sweep(Ctx& c) {
    ScaledMatrix h = matrix_of(c.cfg);
    const auto& ls = c.cfg.lambdas;
    std::vector<ScaleChoice> scales(ls.size());
    std::vector<SpectrumReport> reps(ls.size());
    SpectrumOptions opts;
    opts.complex_digits = std::max(c.digits() + 5, 20);
    parallel_for(ls.size(), c.cfg.jobs, [&](std::size_t i) {
        scales[i] = scale_from_lambda(ls[i], h.scale_base());
        reps[i] = classify_reality(h, scales[i].s, opts);
    });
    std::vector<std::string> header{"lambda", "s", "real_count", "complex_pairs", "verdict"};
    for (std::size_t k = 1; k <= h.size(); ++k) {
        header.push_back("re_" + std::to_string(k));
        header.push_back("im_" + std::to_string(k));
    }
    CsvTable t(header);
    ordered_json samples = ordered_json::array();
    SvgPlot plot("|E| against lambda", "log10 lambda", "log10 |E|");
    std::vector<double> px, py;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const auto& r = reps[i];
        std::vector<std::string> row{c.dec(scales[i].lambda), c.dec(scales[i].s), std::to_string(r.real_count),
                                     std::to_string(r.complex_pairs), to_string(r.verdict)};
        for (const auto& e : r.eigenvalues) {
            row.push_back(c.dec(e.re));
            row.push_back(c.dec(e.im));
            double m = std::hypot(to_double(e.re), to_double(e.im));
            if (m > 0) {
                px.push_back(std::log10(to_double(scales[i].lambda)));
                py.push_back(std::log10(m));
            }
        }
        t.add_row(row);
        samples.push_back({{"scale", scale_json(c, scales[i])},
                           {"real_count", r.real_count},
                           {"complex_pairs", r.complex_pairs},
                           {"verdict", to_string(r.verdict)},
                           {"eigenvalues", eigen_json(c, r.eigenvalues)}});
    }
    plot.add_series(px, py, false);
    c.rep.csv = t.str();
    c.rep.svg = plot.str();
    ordered_json fit_json = nullptr;
    try {
        std::vector<Rational> desc = ls;
        std::sort(desc.begin(), desc.end(), [](const Rational& a, const Rational& b) { return a > b; });
        desc.erase(std::unique(desc.begin(), desc.end()), desc.end());
        ScalingFit fit = scaling_fit(scaled_matrix_source(h, std::max(c.digits() + 5, 20)), desc, c.cfg.jobs);
        ordered_json slopes = ordered_json::array();
        for (std::size_t b = 0; b < fit.branch_slopes.size(); ++b)
            slopes.push_back(fit.branch_excluded[b] ? ordered_json(nullptr) : ordered_json(c.dec(fit.branch_slopes[b])));
        fit_json = {{"pooled_slope", c.dec(fit.pooled_slope)}, {"residual", c.dec(fit.residual)}, {"branch_slopes", slopes}};
    } catch (const InvalidArgument& e) {
        fit_json = {{"skipped", e.what()}};
    }
    c.rep.results = {{"samples", samples}, {"scaling_fit", fit_json}};
}

void cmd_region(Ctx& c) {
    AxisSpec rho = c.cfg.rho_axis.value_or(AxisSpec{Rational(1, 50), Rational(2), 100});
    AxisSpec gam = c.cfg.gamma_axis.value_or(AxisSpec{Rational(-20), Rational(20), 101});
    if (rho.from <= 0) throw InvalidArgument("region: rho axis must be positive");
    RegionMap map = lemma1_region(rho.values(), gam.values(), c.cfg.jobs);
    CsvTable t({"rho", "gamma", "member", "inside_stated_interval"});
    SvgPlot plot("cubic corridor membership", "rho", "gamma'");
    std::vector<double> mx, my;
    for (std::size_t i = 0; i < map.gamma_axis.size(); ++i)
        for (std::size_t j = 0; j < map.rho_axis.size(); ++j) {
            bool in_stated = abs(map.gamma_axis[i]) < pow(map.rho_axis[j], 3);
            t.add_row({c.dec(map.rho_axis[j]), c.dec(map.gamma_axis[i]), map.at(i, j) ? "1" : "0", in_stated ? "1" : "0"});
            if (map.at(i, j)) {
                mx.push_back(to_double(map.rho_axis[j]));
                my.push_back(to_double(map.gamma_axis[i]));
            }
        }
    plot.add_series(mx, my, false);
    std::vector<double> rx, sharp_hi, sharp_lo, stated_hi, stated_lo;
    for (const auto& r : map.rho_axis) {
        double v = to_double(r);
        rx.push_back(v);
        sharp_hi.push_back(std::min(2 * v * v * v, to_double(gam.to)));
        sharp_lo.push_back(std::max(-2 * v * v * v, to_double(gam.from)));
        stated_hi.push_back(std::min(v * v * v, to_double(gam.to)));
        stated_lo.push_back(std::max(-v * v * v, to_double(gam.from)));
    }
    plot.add_series(rx, sharp_hi, true);
    plot.add_series(rx, sharp_lo, true);
    plot.add_series(rx, stated_hi, true);
    plot.add_series(rx, stated_lo, true);
    c.rep.csv = t.str();
    c.rep.svg = plot.str();

    ordered_json bounds = ordered_json::array();
    for (std::size_t j = 0; j < map.rho_axis.size(); ++j) {
        const Rational& r = map.rho_axis[j];
        bounds.push_back({{"rho", c.dec(r)},
                          {"upper", map.upper_boundary[j] ? ordered_json(c.dec(*map.upper_boundary[j])) : ordered_json(nullptr)},
                          {"lower", map.lower_boundary[j] ? ordered_json(c.dec(*map.lower_boundary[j])) : ordered_json(nullptr)},
                          {"sharp", c.dec(2 * pow(r, 3))},
                          {"stated", c.dec(pow(r, 3))}});
    }
    ordered_json l2 = ordered_json::array();
    for (const auto& q : c.cfg.lemma2) {
        Lemma2Interval iv = lemma2_interval(q.alpha, q.beta);
        ordered_json item{{"alpha", exact(q.alpha)}, {"beta", exact(q.beta)}, {"empty", iv.empty}};
        if (iv.empty) {
            item["reason"] = iv.reason;
        } else {
            auto end = [&](const AlgebraicNumber& a) {
                ordered_json e{{"decimal", a.exact ? c.dec(*a.exact) : c.dec(a.root.midpoint())}};
                e["exact"] = a.exact ? ordered_json(exact(*a.exact)) : ordered_json(nullptr);
                e["defining_polynomial"] = poly_json(a.defining);
                e["isolating_interval"] = {exact(a.root.lo), exact(a.root.hi)};
                return e;
            };
            item["lower"] = end(*iv.lower);
            item["upper"] = end(*iv.upper);
        }
        l2.push_back(item);
    }
    c.rep.results = {{"grid", {{"rho_points", map.rho_axis.size()}, {"gamma_points", map.gamma_axis.size()}}},
                     {"stated_interval_contained", map.stated_box_contained},
                     {"sharp_boundary_max_deviation_cells", c.dec(map.sharp_boundary_max_deviation_cells)},
                     {"boundaries", bounds},
                     {"lemma2", l2}};
}

ordered_json membership_json(const Ctx& c, const CorridorResult& r) {
    ordered_json roots = ordered_json::array();
    for (const auto& w : r.witness.roots)
        roots.push_back({{"value", c.dec(w.midpoint())}, {"error_bound", c.dec(w.error_bound())}, {"multiplicity", w.multiplicity}});
    ordered_json j{{"member", r.member}, {"real_count", r.real_count}, {"distinct", r.distinct}, {"marginal", r.marginal},
                   {"roots", roots}};
    j["min_root_gap"] = r.min_root_gap ? ordered_json(c.dec(*r.min_root_gap)) : ordered_json(nullptr);
    if (r.verify_s) {
        j["verify"] = {{"s", c.num(*r.verify_s)}, {"full_verdict", to_string(*r.full_verdict)}, {"agreement", *r.agreement}};
    }
    return j;
}

std::optional<Rational> verify_scale(const RunConfig& cfg) {
    if (cfg.s) return cfg.s;
    if (cfg.lambda) return scale_from_lambda(*cfg.lambda, 2).s;
    return std::nullopt;
}

void leading_output(Ctx& c, const PerturbationSpec& v) {
    JordanSpec j{v.n, c.cfg.e0};
    LeadingSecular l = leading_secular(j, v);
    CorridorResult m = corridor_membership(j, v, verify_scale(c.cfg));
    SymbolicSecular sym = symbolic_leading_secular(v.n);
    CsvTable t({"power", "coefficient", "decimal", "symbolic"});
    ordered_json coeffs = ordered_json::array();
    for (int k = 0; k <= v.n; ++k) {
        Rational q = l.polynomial.coeff(static_cast<std::size_t>(k));
        t.add_row({std::to_string(k), exact(q), c.dec(q), sym.coefficient_string(k)});
        coeffs.push_back({{"power", k}, {"exact", exact(q)}, {"symbolic", sym.coefficient_string(k)}});
    }
    c.rep.csv = t.str();
    ordered_json entries = ordered_json::object();
    for (const auto& [p, val] : v.entries) entries[pos_key(p)] = exact(val);
    c.rep.results["entries"] = entries;
    c.rep.results["leading"] = {{"N", l.n},
                                {"order", l.order},
                                {"polynomial", l.polynomial.to_string("eps")},
                                {"coefficients", coeffs},
                                {"provenance", l.provenance}};
    c.rep.results["membership"] = membership_json(c, m);
}

void cmd_leading(Ctx& c) { leading_output(c, spec_of(c.cfg)); }

void cmd_design(Ctx& c) {
    PerturbationSpec v = design_perturbation(c.cfg.roots);
    ordered_json targets = ordered_json::array();
    for (const auto& r : c.cfg.roots) targets.push_back(exact(r));
    c.rep.results["targets"] = targets;
    leading_output(c, v);
    CsvTable t({"row", "col", "value", "lambda_exponent"});
    for (const auto& [p, val] : v.entries)
        t.add_row({std::to_string(p.first), std::to_string(p.second), exact(val), exact(v.lambda_exponent(p.first, p.second))});
    c.rep.csv = t.str();
}

void cmd_cascade(Ctx& c) {
    CascadeReport r = cascade_report({c.cfg.n, c.cfg.e0}, spec_of(c.cfg));
    auto table = [](const std::map<Position, Rational>& ex) {
        ordered_json o = ordered_json::object();
        for (const auto& [p, e] : ex) o[pos_key(p)] = exact(e);
        return o;
    };
    CsvTable t({"step", "slope", "balance", "row", "col", "from", "to"});
    ordered_json steps = ordered_json::array();
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const auto& s = r.steps[i];
        ordered_json dem = ordered_json::array();
        for (const auto& d : s.demotions) {
            t.add_row({std::to_string(i + 1), exact(s.offending.slope), s.offending.leading.to_string("eps"),
                       std::to_string(d.position.first), std::to_string(d.position.second), exact(d.from), exact(d.to)});
            dem.push_back({{"entry", pos_key(d.position)}, {"from", exact(d.from)}, {"to", exact(d.to)}});
        }
        steps.push_back({{"exponents", table(s.exponents)},
                         {"offending_slope", exact(s.offending.slope)},
                         {"offending_balance", s.offending.leading.to_string("eps")},
                         {"demotions", dem}});
    }
    c.rep.csv = t.str();
    c.rep.results = {{"steps", steps}, {"final_exponents", table(r.final_exponents)}, {"reached_theorem1", r.reached_theorem1}};
    c.rep.results["obstruction"] = r.obstruction ? ordered_json(*r.obstruction) : ordered_json(nullptr);
}

std::vector<Rational> default_chain_couplings() { return {Rational(2), Rational(9, 5), Rational(8, 5), Rational(7, 5)}; }

ESParams es_params(const RunConfig& cfg, const Rational& g) {
    ESParams p;
    p.n = cfg.n;
    p.couplings = cfg.couplings.empty() && cfg.n == 8 ? default_chain_couplings() : cfg.couplings;
    p.g = g;
    p.validate();
    return p;
}

void cmd_es_spectrum(Ctx& c) {
    std::vector<Rational> gs = c.cfg.g_values;
    if (gs.empty())
        for (int k = 1; k <= 20; ++k) gs.push_back(Rational(k, 20));
    const ESParams ref = es_params(c.cfg, Rational(1));
    const int digits = std::max(c.digits() + 5, 30);
    std::vector<SpectrumReport> reps(gs.size());
    SpectrumOptions opts;
    opts.complex_digits = digits;
    parallel_for(gs.size(), c.cfg.jobs, [&](std::size_t i) {
        reps[i] = classify_polynomial(es_characteristic_polynomial(es_params(c.cfg, gs[i])), opts);
    });
    SpectrumReport at_one = classify_polynomial(es_characteristic_polynomial(ref), opts);

    std::vector<std::string> header{"g", "all_real", "distinct_real"};
    for (int k = 1; k <= c.cfg.n; ++k) {
        header.push_back("re_" + std::to_string(k));
        header.push_back("im_" + std::to_string(k));
    }
    CsvTable t(header);
    ordered_json rows = ordered_json::array();
    std::vector<std::vector<double>> branch_y(static_cast<std::size_t>(c.cfg.n));
    std::vector<double> gx;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto& r = reps[i];
        std::vector<std::string> row{c.dec(gs[i]), r.verdict == Verdict::AllReal ? "1" : "0",
                                     std::to_string(r.real_roots.distinct_count())};
        gx.push_back(to_double(gs[i]));
        // sqrt(g) law per sorted branch.
        long double worst = 0;
        bool comparable = r.verdict == Verdict::AllReal && at_one.verdict == Verdict::AllReal;
        const long double sg = std::sqrt(to_long_double(gs[i]));
        for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
            const auto& e = r.eigenvalues[k];
            row.push_back(c.dec(e.re));
            row.push_back(c.dec(e.im));
            branch_y[k].push_back(to_double(e.re));
            if (comparable) {
                long double ref_v = to_long_double(at_one.eigenvalues[k].re);
                if (ref_v != 0) worst = std::max(worst, std::fabs(to_long_double(e.re) / ref_v - sg) / sg);
            }
        }
        t.add_row(row);
        ordered_json item{{"g", c.num(gs[i])},
                          {"within_real_entry_range", gs[i] <= ref.g_max()},
                          {"verdict", to_string(r.verdict)},
                          {"distinct_real", r.real_roots.distinct_count()},
                          {"eigenvalues", eigen_json(c, r.eigenvalues)}};
        item["sqrt_g_law_max_relative_error"] = comparable ? ordered_json(c.dec(worst)) : ordered_json(nullptr);
        rows.push_back(item);
    }
    SvgPlot plot("chain spectrum against g", "g", "E");
    for (const auto& y : branch_y) plot.add_series(gx, y, true);
    c.rep.csv = t.str();
    c.rep.svg = plot.str();
    ordered_json cpl = ordered_json::array();
    for (const auto& x : ref.couplings) cpl.push_back(exact(x));
    c.rep.results = {{"N", c.cfg.n}, {"extrapolated", c.cfg.n != 8}, {"couplings", cpl}, {"samples", rows}};
}

void cmd_pseudospectrum(Ctx& c) {
    Matrix<long double> h;
    ordered_json model;
    if (c.cfg.model == ModelKind::ES) {
        ESModel m = es_hamiltonian(es_params(c.cfg, c.cfg.g_values.front()));
        h = m.numeric();
        model = {{"g", c.num(c.cfg.g_values.front())}};
    } else {
        ScaledMatrix sm = matrix_of(c.cfg);
        ScaleChoice sc = scale_of(c.cfg, sm.scale_base());
        h = to_numeric(sm.at(sc.s));
        model = scale_json(c, sc);
    }
    ComplexRegion region{to_long_double(c.cfg.re_min), to_long_double(c.cfg.re_max), to_long_double(c.cfg.im_min),
                         to_long_double(c.cfg.im_max)};
    PseudoGrid g = pseudospectrum(h, region, static_cast<std::size_t>(c.cfg.nx), static_cast<std::size_t>(c.cfg.ny), c.cfg.jobs);
    CsvTable t({"re", "im", "sigma_min"});
    std::size_t best = 0;
    for (std::size_t i = 0; i < g.im_axis.size(); ++i)
        for (std::size_t j = 0; j < g.re_axis.size(); ++j) {
            t.add_row({c.dec(g.re_axis[j]), c.dec(g.im_axis[i]), c.dec(g.at(i, j))});
            if (g.sigma_min[i * g.re_axis.size() + j] < g.sigma_min[best]) best = i * g.re_axis.size() + j;
        }
    SvgPlot plot("log10 sigma_min(zI - H)", "Re z", "Im z");
    std::vector<double> xa(g.re_axis.begin(), g.re_axis.end()), ya(g.im_axis.begin(), g.im_axis.end()),
        va(g.sigma_min.begin(), g.sigma_min.end());
    plot.set_heatmap(xa, ya, va);
    c.rep.csv = t.str();
    c.rep.svg = plot.str();
    c.rep.results = {{"model", model},
                     {"resolution", {c.cfg.nx, c.cfg.ny}},
                     {"min_sigma",
                      {{"value", c.dec(g.sigma_min[best])},
                       {"re", c.dec(g.re_axis[best % g.re_axis.size()])},
                       {"im", c.dec(g.im_axis[best / g.re_axis.size()])}}}};
}

ordered_json inputs_json(const RunConfig& cfg) {
    ordered_json in{{"command", cfg.command}, {"model", to_string(cfg.model)}, {"N", cfg.n}, {"precision", cfg.precision}};
    ordered_json echo = ordered_json::object();
    for (const auto& [k, v] : cfg.echo) echo[k] = v;
    in["values"] = echo;
    return in;
}

}  // namespace

ordered_json RunReport::to_json() const {
    ordered_json j{{"tool", "epcorridor"}, {"version", EPC_VERSION}, {"command", command}, {"inputs", inputs},
                   {"results", results}, {"files", files}, {"deterministic_hash", deterministic_hash}};
    j["timing_ms"] = timing_ms;
    return j;
}

RunReport run(const RunConfig& config) {
    config.validate();
    RunReport rep;
    rep.command = config.command;
    rep.inputs = inputs_json(config);
    Ctx c{config, rep};
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (config.command == "classify") cmd_classify(c);
        else if (config.command == "sweep") cmd_sweep(c);
        else if (config.command == "region") cmd_region(c);
        else if (config.command == "leading") cmd_leading(c);
        else if (config.command == "design") cmd_design(c);
        else if (config.command == "cascade") cmd_cascade(c);
        else if (config.command == "es-spectrum") cmd_es_spectrum(c);
        else if (config.command == "pseudospectrum") cmd_pseudospectrum(c);
    } catch (const Error& e) {
        throw Error(config.command + ": " + e.what());
    }
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::uint64_t h = fnv1a(rep.inputs.dump());
    h = fnv1a(rep.results.dump(), h);
    h = fnv1a(rep.csv, h);
    rep.deterministic_hash = hex64(h);
    return rep;
}

RunReport execute(const RunConfig& config) {
    RunReport rep = run(config);
    std::filesystem::create_directories(config.out_dir);
    const std::filesystem::path dir(config.out_dir);
    const std::string base = config.command;
    write_file((dir / (base + ".csv")).string(), rep.csv);
    rep.files.push_back(base + ".csv");
    if (config.svg && !rep.svg.empty()) {
        write_file((dir / (base + ".svg")).string(), rep.svg);
        rep.files.push_back(base + ".svg");
    }
    rep.files.push_back(base + ".json");
    write_file((dir / (base + ".json")).string(), rep.to_json().dump(2) + "\n");
    return rep;
}

}  // namespace epc::cli
