#pragma once

// Machine-readable records printed by the command-line tool. JSON objects are
// emitted with sorted keys and every floating-point value with 15 significant
// digits, so the same inputs always produce byte-identical output.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace starbessel::cli {

using json = nlohmann::json;

/// %.15g in the "C" locale; non-finite values become null.
inline std::string format_number(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace detail {

inline void write_json(std::ostringstream& out, const json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {  // nlohmann objects iterate in key order
            if (!first) {
                out << ",\n";
            }
            first = false;
            out << pad << json(key).dump() << ": ";
            write_json(out, value, depth + 1);
        }
        out << "\n" << close_pad << "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out << "[]";
            return;
        }
        out << "[";
        bool first = true;
        for (const auto& value : j) {
            if (!first) {
                out << ", ";
            }
            first = false;
            write_json(out, value, depth + 1);
        }
        out << "]";
        return;
    }
    case json::value_t::number_float:
        out << format_number(j.get<double>());
        return;
    default:
        out << j.dump();
        return;
    }
}

} // namespace detail

inline std::string to_text(const json& j) {
    std::ostringstream out;
    detail::write_json(out, j, 0);
    return out.str();
}

/// One command's output: what was asked, what came back, and how well it converged.
struct OutputRecord {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    json diagnostics = json::object();

    json to_json() const {
        return json{{"command", command}, {"inputs", inputs}, {"result", result}, {"diagnostics", diagnostics}};
    }

    std::string dump() const { return to_text(to_json()) + "\n"; }

    static OutputRecord parse(const std::string& text) {
        const json j = json::parse(text);
        return {j.at("command").get<std::string>(), j.at("inputs"), j.at("result"), j.at("diagnostics")};
    }
};

/// Comma-separated table with a header row and LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string str() const {
        std::string out = join(header_);
        for (const auto& row : rows_) {
            out += join(row);
        }
        return out;
    }

private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                line += ',';
            }
            line += cells[i];
        }
        return line + "\n";
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace starbessel::cli
