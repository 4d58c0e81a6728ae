#include "susyqm/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace susyqm {

namespace {

std::string format_number(double v, int digits) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// RFC 4180: quote a field when it contains the delimiter, a quote, or a newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void append_report_json(std::string& out, const VerificationReport& r) {
    out += "{\"check_name\":\"";
    out += json_escape(r.check_name);
    out += "\",\"params\":{";
    bool first = true;
    for (const auto& [key, value] : r.params) {
        if (!first) out += ',';
        first = false;
        out += '"';
        out += json_escape(key);
        out += "\":";
        out += format_json_number(value);
    }
    out += "},\"grid\":\"";
    out += json_escape(r.grid);
    out += "\",\"max_abs_error\":";
    out += format_json_number(r.max_abs_error);
    out += ",\"tolerance\":";
    out += format_json_number(r.tolerance);
    out += ",\"passed\":";
    out += r.passed ? "true" : "false";
    out += ",\"runtime_ms\":";
    out += format_json_number(r.runtime_ms);
    out += '}';
}

}  // namespace

std::string format_json_number(double v) { return format_number(v, 17); }
std::string format_csv_number(double v) { return format_number(v, 9); }

std::string to_json(const VerificationReport& report) {
    std::string out;
    append_report_json(out, report);
    return out;
}

std::string to_json(const std::vector<VerificationReport>& reports) {
    std::string out = "[";
    for (size_t i = 0; i < reports.size(); ++i) {
        if (i) out += ',';
        append_report_json(out, reports[i]);
    }
    out += "]";
    return out;
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "check_name,params,grid,max_abs_error,tolerance,passed,runtime_ms\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [key, value] : r.params) {
            if (!params.empty()) params += ';';
            params += key + "=" + format_csv_number(value);
        }
        out += csv_field(r.check_name) + ',' + csv_field(params) + ',' + csv_field(r.grid) + ',' +
               format_csv_number(r.max_abs_error) + ',' + format_csv_number(r.tolerance) + ',' +
               (r.passed ? "true" : "false") + ',' + format_csv_number(r.runtime_ms) + '\n';
    }
    return out;
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("reports_from_json: expected a top-level array");
    std::vector<VerificationReport> out;
    for (const auto& item : doc) {
        VerificationReport r;
        auto as_double = [](const nlohmann::json& v) {
            return v.is_null() ? std::nan("") : v.get<double>();
        };
        r.check_name = item.at("check_name").get<std::string>();
        for (const auto& [key, value] : item.at("params").items())
            r.params[key] = as_double(value);
        r.grid = item.at("grid").get<std::string>();
        r.max_abs_error = as_double(item.at("max_abs_error"));
        r.tolerance = as_double(item.at("tolerance"));
        r.passed = item.at("passed").get<bool>();
        r.runtime_ms = as_double(item.at("runtime_ms"));
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_json(const Table& table) {
    std::string out = "{\"columns\":[";
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += json_escape(table.columns[i]);
        out += '"';
    }
    out += "],\"rows\":[";
    for (size_t i = 0; i < table.rows.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (size_t j = 0; j < table.rows[i].size(); ++j) {
            if (j) out += ',';
            out += format_json_number(table.rows[i][j]);
        }
        out += ']';
    }
    out += "]}";
    return out;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_field(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += format_csv_number(row[j]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace susyqm
