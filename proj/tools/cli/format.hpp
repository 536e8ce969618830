#pragma once

#include "epc/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace epc::cli {

/// Fixed significant digits, round half to even.
std::string decimal(const Rational& x, int digits);

/// "num/den" (or "num").
inline std::string exact(const Rational& x) { return to_fraction_string(x); }

/// Comma-separated table with a header row and LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::string str() const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data, std::uint64_t seed = 14695981039346656037ull);
std::string hex64(std::uint64_t v);

void write_file(const std::string& path, const std::string& content);

}  // namespace epc::cli
