#pragma once

#include <map>
#include <string>
#include <vector>

namespace susyqm {

/// Outcome of one registered verification check.
struct VerificationReport {
    std::string check_name;
    std::map<std::string, double> params;  // sorted keys keep serialization stable
    std::string grid;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double runtime_ms = 0.0;
};

/// Numeric table for the CLI subcommands.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Doubles rendered with 17 significant digits (value-preserving round trip).
std::string format_json_number(double v);
/// Doubles rendered with 9 significant digits for CSV tables.
std::string format_csv_number(double v);

std::string to_json(const VerificationReport& report);
std::string to_json(const std::vector<VerificationReport>& reports);
std::string to_csv(const std::vector<VerificationReport>& reports);

/// Inverse of to_json on report lists; to_json(reports_from_json(s)) == s for any s
/// produced by to_json.
std::vector<VerificationReport> reports_from_json(const std::string& text);

std::string to_json(const Table& table);
std::string to_csv(const Table& table);

}  // namespace susyqm
