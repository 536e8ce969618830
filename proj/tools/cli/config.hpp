#pragma once

#include "epc/models/hamiltonians.hpp"
#include "epc/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace epc::cli {

/// Raised for anything wrong in a config file or on the command line. The
/// message names the offending field and, for files, its line.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ModelKind { Bounded, Hierarchical, ES, EPLimit };

std::string to_string(ModelKind kind);
ModelKind parse_model(const std::string& name);

/// Evenly spaced rational axis, both ends included.
struct AxisSpec {
    Rational from;
    Rational to;
    int count = 2;

    std::vector<Rational> values() const;
};

struct Lemma2Query {
    Rational alpha;
    Rational beta;
};

struct RunConfig {
    std::string command;
    ModelKind model = ModelKind::Bounded;
    int n = 2;
    Rational e0{0};
    std::map<Position, Rational> entries;

    std::optional<Rational> lambda;
    std::optional<Rational> s;
    std::vector<Rational> lambdas;

    std::vector<Rational> couplings;
    std::vector<Rational> g_values;

    std::optional<AxisSpec> rho_axis;
    std::optional<AxisSpec> gamma_axis;
    std::vector<Lemma2Query> lemma2;

    std::vector<Rational> roots;

    /// Pseudospectrum region and resolution.
    Rational re_min{-2}, re_max{2}, im_min{-2}, im_max{2};
    int nx = 41;
    int ny = 41;

    std::string out_dir = ".";
    int precision = 15;
    int jobs = 1;
    bool svg = true;

    /// Echo of the raw inputs (exact strings), for the report.
    std::map<std::string, std::string> echo;

    /// Checks cross-field consistency for the chosen command.
    void validate() const;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"classify", "sweep",   "region",      "leading",
                                                "design",   "cascade", "es-spectrum", "pseudospectrum"};
    return names;
}

/// Reads a JSON config. Unknown keys, non-string decimals and malformed
/// numbers raise ConfigError with "line N, field F".
/// A nonempty `command` fills in a missing "command" key and must match a
/// present one.
RunConfig parse_config_text(const std::string& text, const std::string& origin = "config",
                            const std::string& command = "");
RunConfig parse_config_file(const std::string& path, const std::string& command = "");

/// Defaults for a command given only on the command line.
RunConfig default_config(const std::string& command);

/// Exact parse of a user-supplied number with a field name for diagnostics.
Rational parse_field_number(const std::string& text, const std::string& field);

/// "r,c" -> position.
Position parse_position(const std::string& text, const std::string& field);

/// Applies "r,c=value".
void apply_entry_flag(RunConfig& cfg, const std::string& flag);

/// "a,b,c" -> numbers.
std::vector<Rational> parse_number_list(const std::string& text, const std::string& field);

}  // namespace epc::cli
