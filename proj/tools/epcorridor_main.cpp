#include "cli/config.hpp"
#include "cli/execute.hpp"

#include "epc/error.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Flags {
    std::string config, out, model, n, e0, lambda, s, lambdas, roots, g, couplings;
    std::vector<std::string> entries;
    std::optional<int> precision, jobs;
    bool no_svg = false;
};

void add_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config file");
    sub->add_option("--out", f.out, "Output directory");
    sub->add_option("--precision", f.precision, "Significant digits in decimal output");
    sub->add_option("--jobs", f.jobs, "Worker threads");
    sub->add_option("--model", f.model, "bounded | hierarchical | es-model | ep-limit");
    sub->add_option("--N", f.n, "Dimension");
    sub->add_option("--E0", f.e0, "Degenerate eigenvalue");
    sub->add_option("--entry", f.entries, "Perturbation entry r,c=value (repeatable)");
    sub->add_option("--lambda", f.lambda, "Perturbation strength");
    sub->add_option("--s", f.s, "Scale u with lambda = u^m");
    sub->add_option("--lambdas", f.lambdas, "Comma-separated lambda values");
    sub->add_option("--roots", f.roots, "Comma-separated target roots");
    sub->add_option("--g", f.g, "Comma-separated g values");
    sub->add_option("--couplings", f.couplings, "Comma-separated couplings (centre outwards)");
    sub->add_flag("--no-svg", f.no_svg, "Skip the SVG plot");
}

epc::cli::RunConfig build_config(const std::string& command, const Flags& f) {
    using namespace epc::cli;
    RunConfig cfg = f.config.empty() ? default_config(command) : parse_config_file(f.config, command);
    auto note = [&](const std::string& k, const std::string& v) { cfg.echo[k] = v; };
    if (!f.model.empty()) {
        cfg.model = parse_model(f.model);
        note("model", f.model);
    }
    if (!f.n.empty()) {
        try {
            cfg.n = std::stoi(f.n);
        } catch (const std::exception&) {
            throw ConfigError("flag --N: expected an integer, got '" + f.n + "'");
        }
        note("N", f.n);
    }
    if (!f.e0.empty()) {
        cfg.e0 = parse_field_number(f.e0, "--E0");
        note("E0", f.e0);
    }
    for (const auto& e : f.entries) apply_entry_flag(cfg, e);
    if (!f.lambda.empty()) {
        cfg.lambda = parse_field_number(f.lambda, "--lambda");
        note("lambda", f.lambda);
    }
    if (!f.s.empty()) {
        cfg.s = parse_field_number(f.s, "--s");
        note("s", f.s);
    }
    if (!f.lambdas.empty()) {
        cfg.lambdas = parse_number_list(f.lambdas, "--lambdas");
        note("lambdas", f.lambdas);
    }
    if (!f.roots.empty()) {
        cfg.roots = parse_number_list(f.roots, "--roots");
        note("roots", f.roots);
    }
    if (!f.g.empty()) {
        cfg.g_values = parse_number_list(f.g, "--g");
        note("g", f.g);
    }
    if (!f.couplings.empty()) {
        cfg.couplings = parse_number_list(f.couplings, "--couplings");
        note("couplings", f.couplings);
    }
    if (!f.out.empty()) cfg.out_dir = f.out;
    if (f.precision) cfg.precision = *f.precision;
    if (f.jobs) cfg.jobs = *f.jobs;
    if (f.no_svg) cfg.svg = false;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exceptional-point corridor analysis"};
    app.require_subcommand(1);
    Flags flags;
    for (const auto& name : epc::cli::commands()) add_flags(app.add_subcommand(name, "Run " + name), flags);
    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        epc::cli::RunConfig cfg = build_config(command, flags);
        epc::cli::RunReport rep = epc::cli::execute(cfg);
        std::cout << command << ": wrote";
        for (const auto& f : rep.files) std::cout << ' ' << f;
        std::cout << " in " << cfg.out_dir << " (hash " << rep.deterministic_hash << ")\n";
    } catch (const epc::cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
