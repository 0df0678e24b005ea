#include "atomchip/result_table.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace atomchip {

Cell Cell::number(double v) {
    Cell c;
    if (std::isfinite(v)) {
        c.value = v;
        c.valid = true;
    } else {
        c.valid = false;
        c.error = std::isnan(v) ? "not computable" : "diverged";
    }
    return c;
}

Cell Cell::failure(const std::string& reason) {
    Cell c;
    c.valid = false;
    c.error = reason.empty() ? "error" : reason;
    return c;
}

void ResultTable::addRow(const std::vector<Cell>& row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("ResultTable: row width mismatch");
    rows.push_back(row);
}

namespace {

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17); // round-trippable doubles: identical runs, identical bytes
    os << v;
    return os.str();
}

} // namespace

std::string ResultTable::toCsv() const {
    std::ostringstream os;
    os << "# tool: " << tool << "\n";
    os << "# version: " << version << "\n";
    os << "# config: " << configHash << "\n";
    os << "# seed: " << seed << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].valid)
                os << format_number(row[i].value);
            else
                os << "error:" << row[i].error;
            os << (i + 1 < row.size() ? "," : "\n");
        }
    }
    return os.str();
}

std::string ResultTable::toJson() const {
    nlohmann::json j;
    j["provenance"] = {{"tool", tool},
                       {"version", version},
                       {"config", configHash},
                       {"seed", seed}};
    j["columns"] = columns;
    nlohmann::json rowsJson = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) {
            if (cell.valid)
                r.push_back(cell.value);
            else
                r.push_back(nlohmann::json{{"error", cell.error}});
        }
        rowsJson.push_back(std::move(r));
    }
    j["rows"] = std::move(rowsJson);
    return j.dump(2) + "\n";
}

void ResultTable::write(const std::string& path, const std::string& format) const {
    std::string text;
    if (format == "csv")
        text = toCsv();
    else if (format == "json")
        text = toJson();
    else
        throw std::invalid_argument("ResultTable: unknown format '" + format + "'");
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("ResultTable: cannot open '" + path + "'");
    out << text;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string code_version() { return "atomchip 1.0.0"; }

} // namespace atomchip
