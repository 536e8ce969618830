#include "cli/config.hpp"
#include "cli/execute.hpp"
#include "cli/format.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace epc;
using namespace epc::cli;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (quoted) {
            if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cell += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            row.push_back(cell);
            cell.clear();
        } else if (ch == '\n') {
            row.push_back(cell);
            cell.clear();
            rows.push_back(row);
            row.clear();
        } else {
            cell += ch;
        }
    }
    return rows;
}

std::string read_all(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig cfg_for(const std::string& text) { return parse_config_text(text, "test.json"); }

}  // namespace

TEST(Config, AcceptsChainConfig) {
    RunConfig c = cfg_for(R"({"command": "es-spectrum",
        "couplings": {"a": "2", "b": "1.8", "c": "1.6", "d": "1.4"},
        "g_values": ["1/4", "0.5", 1]})");
    EXPECT_EQ(c.model, ModelKind::ES);
    EXPECT_EQ(c.n, 8);
    ASSERT_EQ(c.couplings.size(), 4u);
    EXPECT_EQ(c.couplings[1], Rational(9, 5));
    EXPECT_EQ(c.g_values[1], Rational(1, 2));
}

TEST(Config, RejectsHierarchicalEntryAboveDiagonal) {
    try {
        cfg_for("{\"command\": \"leading\", \"N\": 3,\n \"entries\": {\"1,2\": 1}}");
        FAIL() << "accepted an upper-triangular hierarchical entry";
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("strictly below the diagonal"), std::string::npos) << msg;
        EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    }
}

TEST(Config, ScientificLambdaIsExact) {
    RunConfig c = cfg_for(R"({"command": "classify", "N": 2, "entries": {"2,1": 4}, "lambda": "1e-4"})");
    ASSERT_TRUE(c.lambda);
    EXPECT_EQ(*c.lambda, Rational(1, 10000));
    RunReport r = run(c);
    EXPECT_EQ(r.results["scale"]["s"]["exact"], "1/100");
    EXPECT_EQ(r.results["scale"]["lambda_is_exact_power"], true);
}

TEST(Config, UnknownKeyNamesLineAndField) {
    try {
        cfg_for("{\n  \"command\": \"region\",\n  \"colour\": \"red\"\n}");
        FAIL();
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
        EXPECT_NE(msg.find("colour"), std::string::npos) << msg;
    }
}

TEST(Config, FloatLiteralRejected) {
    EXPECT_THROW(cfg_for(R"({"command": "classify", "N": 2, "lambda": 0.01})"), ConfigError);
}

TEST(Config, CommandMismatchRejected) {
    EXPECT_THROW(parse_config_text(R"({"command": "region"})", "t", "leading"), ConfigError);
    RunConfig c = parse_config_text(R"({"N": 3})", "t", "leading");
    EXPECT_EQ(c.command, "leading");
    EXPECT_EQ(c.model, ModelKind::Hierarchical);
}

TEST(Execute, ChainSpectrumCsv) {
    RunConfig c = default_config("es-spectrum");
    c.g_values = {Rational(1, 4), Rational(1, 2), Rational(1)};
    RunReport r = run(c);
    auto rows = parse_csv(r.csv);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0][0], "g");
    EXPECT_EQ(rows[0].size(), 3u + 16u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i][1], "1");
        EXPECT_EQ(rows[i][2], "8");
    }
}

TEST(Execute, LeadingQuinticCoefficients) {
    RunConfig c = default_config("leading");
    c.n = 5;
    for (int k = 1; k <= 4; ++k) c.entries[{k + 1, k}] = Rational(k);
    c.entries[{5, 1}] = Rational(7);
    RunReport r = run(c);
    const auto& co = r.results["leading"]["coefficients"];
    ASSERT_EQ(co.size(), 6u);
    // -eps^5 + (sum mu) eps^3 - (mu1 mu3 + mu1 mu4 + mu2 mu4) eps + gamma.
    EXPECT_EQ(co[5]["exact"], "-1");
    EXPECT_EQ(co[3]["exact"], "10");
    EXPECT_EQ(co[1]["exact"], std::to_string(-(1 * 3 + 1 * 4 + 2 * 4)));
    EXPECT_EQ(co[0]["exact"], "7");
    EXPECT_EQ(co[3]["symbolic"], "h[2,1] + h[3,2] + h[4,3] + h[5,4]");
}

TEST(Execute, NegativeCouplingBreaks) {
    RunConfig c = default_config("classify");
    c.n = 2;
    c.entries[{2, 1}] = Rational(-1);
    c.lambda = Rational(1, 100);
    RunReport r = run(c);
    EXPECT_EQ(r.results["verdict"], "Broken");
    EXPECT_EQ(r.results["complex_pairs"], 1);
}

TEST(Execute, DesignRoundTrip) {
    RunConfig c = default_config("design");
    c.roots = {Rational(-3), Rational(1), Rational(2)};
    RunReport r = run(c);
    EXPECT_EQ(r.results["membership"]["member"], true);
    auto rows = parse_csv(r.csv);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"row", "col", "value", "lambda_exponent"}));
}

TEST(Execute, ErrorsCarryCommand) {
    RunConfig c = default_config("design");
    c.roots = {Rational(1), Rational(2)};
    try {
        run(c);
        FAIL();
    } catch (const std::exception& e) {
        EXPECT_EQ(std::string(e.what()).rfind("design: ", 0), 0u) << e.what();
    }
}

TEST(Determinism, JobsDoNotChangeOutput) {
    const std::filesystem::path base = std::filesystem::temp_directory_path() / "epc_cli_det";
    std::filesystem::remove_all(base);
    for (const std::string cmd : {"region", "es-spectrum", "sweep", "pseudospectrum"}) {
        RunConfig c = default_config(cmd);
        if (cmd == "region") {
            c.rho_axis = AxisSpec{Rational(1, 10), Rational(1), 10};
            c.gamma_axis = AxisSpec{Rational(-2), Rational(2), 9};
        } else if (cmd == "sweep") {
            c.model = ModelKind::Hierarchical;
            c.n = 3;
            c.entries = {{{2, 1}, Rational(1)}, {{3, 2}, Rational(2)}};
            c.lambdas = {Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};
        } else if (cmd == "pseudospectrum") {
            c.model = ModelKind::EPLimit;
            c.n = 3;
            c.nx = c.ny = 9;
        }
        std::string files[2], hashes[2];
        for (int k = 0; k < 2; ++k) {
            c.jobs = k == 0 ? 1 : 4;
            c.out_dir = (base / (cmd + std::to_string(k))).string();
            RunReport r = execute(c);
            hashes[k] = r.deterministic_hash;
            files[k] = read_all(std::filesystem::path(c.out_dir) / (cmd + ".csv"));
        }
        EXPECT_EQ(hashes[0], hashes[1]) << cmd;
        EXPECT_EQ(files[0], files[1]) << cmd;
        EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(c.out_dir) / (cmd + ".json")));
    }
    std::filesystem::remove_all(base);
}

TEST(Format, CsvQuotesAndReparses) {
    CsvTable t({"a", "b"});
    t.add_row({"x,y", "say \"hi\""});
    t.add_row({"1", ""});
    auto rows = parse_csv(t.str());
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1][0], "x,y");
    EXPECT_EQ(rows[1][1], "say \"hi\"");
    EXPECT_EQ(rows[2][1], "");
    EXPECT_THROW(t.add_row({"only one"}), std::exception);
}

TEST(Format, DecimalRoundsHalfEven) {
    EXPECT_EQ(decimal(Rational(125, 1000), 2), "1.2e-01");
    EXPECT_EQ(decimal(Rational(135, 1000), 2), "1.4e-01");
}
