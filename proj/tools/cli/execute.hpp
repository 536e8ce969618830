#pragma once

#include "config.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace epc::cli {

struct RunReport {
    std::string command;
    nlohmann::ordered_json inputs;
    nlohmann::ordered_json results;
    std::string csv;
    std::string svg;
    /// FNV-1a over inputs, results and CSV; independent of timing and jobs.
    std::string deterministic_hash;
    double timing_ms = 0;
    std::vector<std::string> files;

    /// Full JSON report (stable key order).
    nlohmann::ordered_json to_json() const;
};

/// Runs the configured command. Nothing is written to disk.
RunReport run(const RunConfig& config);

/// run() and write <command>.csv, <command>.json and (optionally)
/// <command>.svg into config.out_dir.
RunReport execute(const RunConfig& config);

}  // namespace epc::cli
