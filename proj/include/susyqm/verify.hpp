#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "susyqm/report.hpp"

namespace susyqm {

struct KappaGrid {
    double min = 0.3;
    double max = 5.0;
    int count = 25;
    Eigen::VectorXd values() const;
};

/// Knobs shared by every registered check; tolerances may be overridden by name.
struct RunConfig {
    int n_max = 3;
    KappaGrid kappa;
    double r_max = 25.0;
    double step = 1e-3;
    std::map<std::string, double> tolerance_overrides;

    double tolerance_for(const std::string& check_name, double fallback) const;
};

struct CheckEntry {
    std::string name;
    std::function<VerificationReport(const RunConfig&)> run;
};

/// All registered checks, sorted by name.
const std::vector<CheckEntry>& verification_registry();

/// Run one check by name; throws std::out_of_range for unknown names.
VerificationReport run_check(const std::string& name, const RunConfig& config);

/// Run every check in registry order.
std::vector<VerificationReport> run_all_checks(const RunConfig& config);

}  // namespace susyqm
