#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace atomchip {

// A tabular result cell: either a finite number or an error marker with a
// reason.  Non-finite values are converted to error cells at insertion, so
// serialized tables never contain NaN or infinity literals.
struct Cell {
    double value = 0.0;
    bool valid = false;
    std::string error; // why the value is missing

    static Cell number(double v);
    static Cell failure(const std::string& reason);
};

// Column-oriented numeric result table with run provenance, serializable to
// CSV (provenance in comment headers) and JSON.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::string tool;       // emitting subcommand
    std::string configHash; // FNV-1a of the canonical configuration text
    std::uint64_t seed = 0;
    std::string version;

    void addRow(const std::vector<Cell>& row);
    std::string toCsv() const;
    std::string toJson() const; // pretty-printed

    // Write to path ("" or "-" = stdout), format "csv" or "json".
    void write(const std::string& path, const std::string& format) const;
};

// FNV-1a hash of a string, hex-encoded; used to fingerprint configurations.
std::string fnv1a_hex(const std::string& text);

// Version stamp recorded in every table.
std::string code_version();

} // namespace atomchip
