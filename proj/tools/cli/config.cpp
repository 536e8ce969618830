#include "config.hpp"

#include "epc/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace epc::cli {

using nlohmann::json;

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Bounded: return "bounded";
        case ModelKind::Hierarchical: return "hierarchical";
        case ModelKind::ES: return "es-model";
        case ModelKind::EPLimit: return "ep-limit";
    }
    return "?";
}

ModelKind parse_model(const std::string& name) {
    if (name == "bounded" || name == "jordan+bounded") return ModelKind::Bounded;
    if (name == "hierarchical" || name == "jordan+hierarchical") return ModelKind::Hierarchical;
    if (name == "es-model" || name == "es") return ModelKind::ES;
    if (name == "ep-limit") return ModelKind::EPLimit;
    throw ConfigError("field model: unknown model '" + name + "' (bounded, hierarchical, es-model, ep-limit)");
}

std::vector<Rational> AxisSpec::values() const {
    std::vector<Rational> out;
    for (int k = 0; k < count; ++k) out.push_back(from + (to - from) * Rational(k, count - 1));
    return out;
}

Rational parse_field_number(const std::string& text, const std::string& field) {
    try {
        return parse_rational(text);
    } catch (const InvalidArgument&) {
        throw ConfigError("field " + field + ": malformed number '" + text + "'");
    }
}

Position parse_position(const std::string& text, const std::string& field) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument(text);
        std::size_t used_r = 0, used_c = 0;
        std::string rs = text.substr(0, comma), cs = text.substr(comma + 1);
        int r = std::stoi(rs, &used_r), c = std::stoi(cs, &used_c);
        if (used_r != rs.size() || used_c != cs.size()) throw std::invalid_argument(text);
        return {r, c};
    } catch (const std::exception&) {
        throw ConfigError("field " + field + ": expected 'row,col', got '" + text + "'");
    }
}

std::vector<Rational> parse_number_list(const std::string& text, const std::string& field) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_field_number(item, field));
    if (out.empty()) throw ConfigError("field " + field + ": empty list");
    return out;
}

void apply_entry_flag(RunConfig& cfg, const std::string& flag) {
    auto eq = flag.find('=');
    if (eq == std::string::npos) throw ConfigError("field --entry: expected 'row,col=value', got '" + flag + "'");
    Position p = parse_position(flag.substr(0, eq), "--entry");
    cfg.entries[p] = parse_field_number(flag.substr(eq + 1), "--entry");
    cfg.echo["entries." + flag.substr(0, eq)] = flag.substr(eq + 1);
}

namespace {

class Reader {
public:
    Reader(const std::string& text, std::string origin) : text_(text), origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw ConfigError(origin_ + ": line " + std::to_string(line_of(field)) + ", field " + field + ": " + what);
    }

    Rational number(const json& v, const std::string& field, RunConfig& cfg) const {
        std::string raw;
        if (v.is_string())
            raw = v.get<std::string>();
        else if (v.is_number_integer())
            raw = std::to_string(v.get<long long>());
        else if (v.is_number())
            fail(field, "write non-integer numbers as strings so they stay exact");
        else
            fail(field, "expected a number");
        try {
            Rational q = parse_rational(raw);
            cfg.echo[field] = raw;
            return q;
        } catch (const InvalidArgument&) {
            fail(field, "malformed number '" + raw + "'");
        }
    }

    int integer(const json& v, const std::string& field) const {
        if (!v.is_number_integer()) fail(field, "expected an integer");
        return v.get<int>();
    }

    std::vector<Rational> list(const json& v, const std::string& field, RunConfig& cfg) const {
        if (!v.is_array()) fail(field, "expected an array");
        std::vector<Rational> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(number(v[i], field + "[" + std::to_string(i) + "]", cfg));
        return out;
    }

    AxisSpec axis(const json& v, const std::string& field, RunConfig& cfg) const {
        if (!v.is_object()) fail(field, "expected {\"from\", \"to\", \"count\"}");
        check_keys(v, field, {"from", "to", "count"});
        for (const char* k : {"from", "to", "count"})
            if (!v.contains(k)) fail(field, std::string("missing '") + k + "'");
        AxisSpec a{number(v["from"], field + ".from", cfg), number(v["to"], field + ".to", cfg),
                   integer(v["count"], field + ".count")};
        if (a.count < 2) fail(field + ".count", "needs at least 2 points");
        if (!(a.from < a.to)) fail(field, "'from' must be below 'to'");
        return a;
    }

    void check_keys(const json& obj, const std::string& prefix, const std::set<std::string>& allowed) const {
        for (const auto& [k, v] : obj.items())
            if (!allowed.count(k)) fail(prefix.empty() ? k : prefix + "." + k, "unknown key");
    }

private:
    // Line of the first occurrence of the innermost key of `field`.
    int line_of(const std::string& field) const {
        std::string key = field;
        if (auto dot = key.find_last_of('.'); dot != std::string::npos) key = key.substr(dot + 1);
        if (auto br = key.find('['); br != std::string::npos) key = key.substr(0, br);
        auto pos = text_.find("\"" + key + "\"");
        if (pos == std::string::npos) return 1;
        return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
    }

    const std::string& text_;
    std::string origin_;
};

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin, const std::string& command) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t at = std::min(e.byte, text.size());
        int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(at), '\n'));
        throw ConfigError(origin + ": line " + std::to_string(line) + ": malformed JSON");
    }
    Reader rd(text, origin);
    if (!doc.is_object()) throw ConfigError(origin + ": top level must be an object");
    rd.check_keys(doc, "", {"command", "model", "N", "E0", "entries", "lambda", "s", "lambdas", "couplings", "g",
                            "g_values", "rho_axis", "gamma_axis", "lemma2", "roots", "region", "resolution", "out",
                            "precision", "jobs", "svg"});

    RunConfig cfg;
    if (doc.contains("command")) {
        if (!doc["command"].is_string()) rd.fail("command", "expected a string");
        cfg.command = doc["command"].get<std::string>();
        if (!command.empty() && cfg.command != command)
            rd.fail("command", "file says '" + cfg.command + "' but '" + command + "' was requested");
    }
    if (!command.empty()) cfg.command = command;
    if (doc.contains("model")) {
        if (!doc["model"].is_string()) rd.fail("model", "expected a string");
        try {
            cfg.model = parse_model(doc["model"].get<std::string>());
        } catch (const ConfigError& e) {
            rd.fail("model", "unknown model '" + doc["model"].get<std::string>() + "'");
        }
    } else if (cfg.command == "es-spectrum") {
        cfg.model = ModelKind::ES;
    } else if (cfg.command == "leading" || cfg.command == "design") {
        cfg.model = ModelKind::Hierarchical;
    }
    if (doc.contains("N")) cfg.n = rd.integer(doc["N"], "N");
    else if (cfg.model == ModelKind::ES) cfg.n = 8;
    if (doc.contains("E0")) cfg.e0 = rd.number(doc["E0"], "E0", cfg);
    if (doc.contains("entries")) {
        const json& e = doc["entries"];
        if (!e.is_object()) rd.fail("entries", "expected an object of \"row,col\": value");
        for (const auto& [k, v] : e.items()) {
            Position p;
            try {
                p = parse_position(k, "entries." + k);
            } catch (const ConfigError&) {
                rd.fail("entries." + k, "expected a \"row,col\" key");
            }
            cfg.entries[p] = rd.number(v, "entries." + k, cfg);
        }
    }
    if (doc.contains("lambda")) cfg.lambda = rd.number(doc["lambda"], "lambda", cfg);
    if (doc.contains("s")) cfg.s = rd.number(doc["s"], "s", cfg);
    if (doc.contains("lambdas")) cfg.lambdas = rd.list(doc["lambdas"], "lambdas", cfg);
    if (doc.contains("couplings")) {
        const json& c = doc["couplings"];
        if (c.is_object()) {
            // Named half-profile, centre first: a, b, c, d, ...
            std::vector<std::string> names;
            for (const auto& [k, v] : c.items()) names.push_back(k);
            std::sort(names.begin(), names.end());
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (names[i] != std::string(1, static_cast<char>('a' + i)))
                    rd.fail("couplings." + names[i], "coupling names must be a, b, c, ... without gaps");
                cfg.couplings.push_back(rd.number(c[names[i]], "couplings." + names[i], cfg));
            }
        } else {
            cfg.couplings = rd.list(c, "couplings", cfg);
        }
    }
    if (doc.contains("g")) cfg.g_values = {rd.number(doc["g"], "g", cfg)};
    if (doc.contains("g_values")) cfg.g_values = rd.list(doc["g_values"], "g_values", cfg);
    if (doc.contains("rho_axis")) cfg.rho_axis = rd.axis(doc["rho_axis"], "rho_axis", cfg);
    if (doc.contains("gamma_axis")) cfg.gamma_axis = rd.axis(doc["gamma_axis"], "gamma_axis", cfg);
    if (doc.contains("lemma2")) {
        const json& q = doc["lemma2"];
        if (!q.is_array()) rd.fail("lemma2", "expected an array of {\"alpha\", \"beta\"}");
        for (std::size_t i = 0; i < q.size(); ++i) {
            const std::string f = "lemma2[" + std::to_string(i) + "]";
            if (!q[i].is_object() || !q[i].contains("alpha") || !q[i].contains("beta"))
                rd.fail(f, "expected {\"alpha\", \"beta\"}");
            rd.check_keys(q[i], f, {"alpha", "beta"});
            cfg.lemma2.push_back({rd.number(q[i]["alpha"], f + ".alpha", cfg), rd.number(q[i]["beta"], f + ".beta", cfg)});
        }
    }
    if (doc.contains("roots")) cfg.roots = rd.list(doc["roots"], "roots", cfg);
    if (doc.contains("region")) {
        const json& r = doc["region"];
        if (!r.is_object()) rd.fail("region", "expected {\"re_min\", \"re_max\", \"im_min\", \"im_max\"}");
        rd.check_keys(r, "region", {"re_min", "re_max", "im_min", "im_max"});
        if (r.contains("re_min")) cfg.re_min = rd.number(r["re_min"], "region.re_min", cfg);
        if (r.contains("re_max")) cfg.re_max = rd.number(r["re_max"], "region.re_max", cfg);
        if (r.contains("im_min")) cfg.im_min = rd.number(r["im_min"], "region.im_min", cfg);
        if (r.contains("im_max")) cfg.im_max = rd.number(r["im_max"], "region.im_max", cfg);
    }
    if (doc.contains("resolution")) {
        const json& r = doc["resolution"];
        if (!r.is_array() || r.size() != 2) rd.fail("resolution", "expected [nx, ny]");
        cfg.nx = rd.integer(r[0], "resolution");
        cfg.ny = rd.integer(r[1], "resolution");
    }
    if (doc.contains("out")) {
        if (!doc["out"].is_string()) rd.fail("out", "expected a string");
        cfg.out_dir = doc["out"].get<std::string>();
    }
    if (doc.contains("precision")) cfg.precision = rd.integer(doc["precision"], "precision");
    if (doc.contains("jobs")) cfg.jobs = rd.integer(doc["jobs"], "jobs");
    if (doc.contains("svg")) {
        if (!doc["svg"].is_boolean()) rd.fail("svg", "expected true or false");
        cfg.svg = doc["svg"].get<bool>();
    }
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        // Attach the line of the field named in the message when possible.
        std::string msg = e.what();
        const std::string tag = "field ";
        if (msg.rfind(tag, 0) == 0) {
            std::string field = msg.substr(tag.size(), msg.find(':') - tag.size());
            rd.fail(field, msg.substr(msg.find(':') + 2));
        }
        throw ConfigError(origin + ": " + msg);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path, const std::string& command) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path, command);
}

void RunConfig::validate() const {
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
        throw ConfigError("field command: unknown command '" + command + "'");
    if (n < 1) throw ConfigError("field N: dimension must be >= 1");
    if (precision < 1 || precision > 60) throw ConfigError("field precision: must lie in [1, 60]");
    if (jobs < 1) throw ConfigError("field jobs: must be >= 1");
    for (const auto& [p, v] : entries) {
        const std::string f = "entries." + std::to_string(p.first) + "," + std::to_string(p.second);
        if (p.first < 1 || p.first > n || p.second < 1 || p.second > n)
            throw ConfigError("field " + f + ": outside a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
        if (model == ModelKind::Hierarchical && p.first <= p.second)
            throw ConfigError("field " + f + ": hierarchical entries must lie strictly below the diagonal");
    }
    if (!entries.empty() && (model == ModelKind::ES || model == ModelKind::EPLimit))
        throw ConfigError("field entries: the " + to_string(model) + " model takes no perturbation entries");
    if (lambda && *lambda <= 0) throw ConfigError("field lambda: must be positive");
    if (s && *s <= 0) throw ConfigError("field s: must be positive");
    for (const auto& l : lambdas)
        if (l <= 0) throw ConfigError("field lambdas: values must be positive");
    if (model == ModelKind::ES) {
        if (n % 2 != 0 || n < 2) throw ConfigError("field N: the es-model needs an even dimension");
        if (!couplings.empty() && static_cast<int>(couplings.size()) != n / 2)
            throw ConfigError("field couplings: N = " + std::to_string(n) + " needs " + std::to_string(n / 2) +
                              " couplings, got " + std::to_string(couplings.size()));
        for (const auto& c : couplings)
            if (c <= 0) throw ConfigError("field couplings: values must be positive");
        for (const auto& g : g_values)
            if (g < 0) throw ConfigError("field g_values: values must be >= 0");
    }

    const bool matrix_model = model == ModelKind::Bounded || model == ModelKind::Hierarchical || model == ModelKind::EPLimit;
    if (command == "classify") {
        if (!matrix_model) throw ConfigError("field model: classify needs bounded, hierarchical or ep-limit");
        if (!lambda && !s) throw ConfigError("field lambda: classify needs lambda or s");
    } else if (command == "sweep") {
        if (!matrix_model) throw ConfigError("field model: sweep needs bounded, hierarchical or ep-limit");
        if (lambdas.empty()) throw ConfigError("field lambdas: sweep needs at least one lambda");
    } else if (command == "leading") {
        if (model != ModelKind::Hierarchical) throw ConfigError("field model: leading needs the hierarchical model");
    } else if (command == "design") {
        if (roots.size() < 2) throw ConfigError("field roots: design needs at least two target roots");
    } else if (command == "cascade") {
        if (model != ModelKind::Bounded) throw ConfigError("field model: cascade needs the bounded model");
    } else if (command == "es-spectrum") {
        if (model != ModelKind::ES) throw ConfigError("field model: es-spectrum needs the es-model");
    } else if (command == "pseudospectrum") {
        if (nx < 2 || ny < 2) throw ConfigError("field resolution: needs at least 2x2");
        if (!(re_min < re_max) || !(im_min < im_max)) throw ConfigError("field region: empty region");
        if ((model == ModelKind::Bounded || model == ModelKind::Hierarchical) && !lambda && !s)
            throw ConfigError("field lambda: pseudospectrum of a perturbed block needs lambda or s");
        if (model == ModelKind::ES && g_values.size() != 1)
            throw ConfigError("field g: pseudospectrum of the es-model needs exactly one g");
    }
}

}  // namespace epc::cli

namespace epc::cli {

RunConfig default_config(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    if (command == "es-spectrum") {
        cfg.model = ModelKind::ES;
        cfg.n = 8;
    } else if (command == "leading" || command == "design") {
        cfg.model = ModelKind::Hierarchical;
    }
    return cfg;
}

}  // namespace epc::cli
