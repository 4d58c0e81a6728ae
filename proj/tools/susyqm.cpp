// Command-line harness around the susyqm library: tabulates the potential families,
// bound states, phase shifts and identity residuals, and runs the verification suite.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "susyqm/phase_equiv.hpp"
#include "susyqm/potentials_spectra.hpp"
#include "susyqm/report.hpp"
#include "susyqm/scattering.hpp"
#include "susyqm/verify.hpp"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

struct OutputOpts {
    std::string format = "csv";
    std::string path;
};

void add_output_options(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.path, "Write output to a file instead of stdout");
}

int emit(const std::string& text, const OutputOpts& opts) {
    if (opts.path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(opts.path);
    if (!file) {
        std::cerr << "error: cannot open " << opts.path << " for writing\n";
        return kExitUsage;
    }
    file << text;
    return file.good() ? 0 : kExitUsage;
}

int emit_table(const susyqm::Table& table, const OutputOpts& opts) {
    return emit(opts.format == "json" ? susyqm::to_json(table) : susyqm::to_csv(table), opts);
}

susyqm::DetSystem ladder_system(int n) {
    return susyqm::DetSystem::plain(susyqm::GammaSequence::consecutive(2 * n));
}

int run_potential(int n, double r_max, double step, const OutputOpts& opts) {
    const susyqm::PotentialModel deep = susyqm::PotentialModel::deep_sech2(n);
    const susyqm::PotentialModel singular = susyqm::PotentialModel::singular_cosech2(n);
    const susyqm::PotentialModel built = susyqm::PotentialModel::determinant_built(ladder_system(n));
    susyqm::Table table;
    table.columns = {"r", "deep_sech2", "singular_cosech2", "determinant_built",
                     "det_vs_deep_abs_err"};
    for (double r = step; r <= r_max + 1e-12; r += step) {
        const double vd = susyqm::potential_value(deep, r);
        const double vs = susyqm::potential_value(singular, r);
        const double vb = susyqm::potential_value(built, r);
        table.rows.push_back({r, vd, vs, vb, std::abs(vb - vd)});
    }
    return emit_table(table, opts);
}

int run_boundstates(int n, const OutputOpts& opts) {
    const susyqm::BoundStateSet set = susyqm::make_bound_state_set(n);
    susyqm::Table table;
    table.columns = {"j", "gamma", "energy", "normalizer", "psi_at_1", "phi_at_1",
                     "norm_integral"};
    for (const susyqm::BoundStateInfo& state : set.states) {
        const double norm = susyqm::integrate(
            [&](double y) {
                const double v = set.psi(state.j, y);
                return v * v;
            },
            0.0, std::numeric_limits<double>::infinity());
        table.rows.push_back({double(state.j), state.gamma, state.energy,
                              susyqm::bound_state_normalizer(n, state.j), set.psi(state.j, 1.0),
                              set.phi(state.j, 1.0), norm});
    }
    return emit_table(table, opts);
}

int run_scatter(int n, const susyqm::KappaGrid& grid, double step, double r_match,
                const OutputOpts& opts) {
    const Eigen::VectorXd kappas = grid.values();
    using susyqm::PhaseRoute;
    const auto closed = susyqm::phase_shift_curve(n, false, PhaseRoute::ClosedForm, kappas);
    const auto det = susyqm::phase_shift_curve(n, false, PhaseRoute::DeterminantRatio, kappas,
                                               step, r_match);
    const auto numerov = susyqm::phase_shift_curve(n, false, PhaseRoute::NumerovIntegration,
                                                   kappas, step, r_match);
    const auto closed_s = susyqm::phase_shift_curve(n, true, PhaseRoute::ClosedForm, kappas);
    const auto det_s = susyqm::phase_shift_curve(n, true, PhaseRoute::DeterminantRatio, kappas,
                                                 step, r_match);
    susyqm::Table table;
    table.columns = {"kappa", "delta_closed", "delta_det", "delta_numerov",
                     "singular_closed", "singular_det", "pi_multiple_diff"};
    for (Eigen::Index i = 0; i < kappas.size(); ++i)
        table.rows.push_back({kappas[i], closed.deltas[i], det.deltas[i], numerov.deltas[i],
                              closed_s.deltas[i], det_s.deltas[i],
                              (det.deltas[i] - det_s.deltas[i]) / std::numbers::pi});
    return emit_table(table, opts);
}

int run_phase_equiv(int n, double r_max, double step, const OutputOpts& opts) {
    susyqm::Table table;
    table.columns = {"r", "singular_exact", "reconstructed", "abs_err", "partner_solve_rel_err",
                     "overlap_condition"};
    for (double r = std::max(0.2, step); r <= r_max + 1e-12; r += step) {
        const double s = std::sinh(r);
        const double exact = 2.0 * double(n) * double(2 * n + 1) / (s * s);
        const double rebuilt = susyqm::singular_from_deep(n, r);
        const Eigen::VectorXd solved = susyqm::partner_states_solve(n, r);
        double solve_err = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double closed = susyqm::partner_state(n, j, r);
            solve_err = std::max(solve_err, std::abs(solved[j - 1] - closed) / std::abs(closed));
        }
        table.rows.push_back({r, exact, rebuilt, std::abs(rebuilt - exact), solve_err,
                              susyqm::overlap_condition(n, r)});
    }
    return emit_table(table, opts);
}

int run_identity(int n, const OutputOpts& opts) {
    susyqm::Table table;
    table.columns = {"z", "pot_sum", "pot_closed", "prod_sum", "prod_closed",
                     "legendre_sum", "legendre_closed"};
    const int count = 2 * n;
    for (double z = 0.05; z <= 0.95 + 1e-12; z += 0.05) {
        const double r = std::atanh(z);
        const susyqm::IdentitySides prod = susyqm::product_sum_identity(n, r);
        const susyqm::IdentitySides leg = susyqm::legendre_product_identity(n, z);
        table.rows.push_back({z, susyqm::eigenstate_sum_potential(count, z),
                              -double(count) * double(count + 1) * (1.0 - z * z), prod.lhs,
                              prod.rhs, leg.lhs, leg.rhs});
    }
    return emit_table(table, opts);
}

int run_verify_all(const susyqm::RunConfig& config, const OutputOpts& opts) {
    const std::vector<susyqm::VerificationReport> reports = susyqm::run_all_checks(config);
    const int status = emit(
        opts.format == "json" ? susyqm::to_json(reports) : susyqm::to_csv(reports), opts);
    if (status != 0) return status;
    for (const susyqm::VerificationReport& report : reports)
        if (!report.passed) return kExitFailedCheck;
    return 0;
}

bool parse_tolerance_overrides(const std::vector<std::string>& raw,
                               std::map<std::string, double>& out) {
    for (const std::string& item : raw) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "error: --tol expects NAME=VALUE, got '" << item << "'\n";
            return false;
        }
        const std::string name = item.substr(0, eq);
        bool known = false;
        for (const susyqm::CheckEntry& entry : susyqm::verification_registry())
            if (entry.name == name) known = true;
        if (!known) {
            std::cerr << "error: unknown check name in --tol: '" << name << "'\n";
            return false;
        }
        try {
            size_t used = 0;
            const double value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1 || !(value > 0.0)) throw std::invalid_argument("");
            out[name] = value;
        } catch (const std::exception&) {
            std::cerr << "error: bad tolerance value in '" << item << "'\n";
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reflectionless sech^2 wells, their singular phase-equivalent partners,\n"
                 "and the determinant identities connecting them"};
    app.require_subcommand(1);

    int n = 1;
    susyqm::KappaGrid kappa_grid;
    double r_max = 5.0;
    double table_step = 0.1;
    double ode_step = 1e-3;
    double r_match = 25.0;
    std::vector<std::string> tol_raw;
    OutputOpts opts;

    CLI::App* potential = app.add_subcommand("potential", "Tabulate the potential families");
    potential->add_option("--n", n, "Well index")->check(CLI::PositiveNumber)
        ->capture_default_str();
    potential->add_option("--r-max", r_max, "Largest radius")->capture_default_str();
    potential->add_option("--step", table_step, "Radial step")->capture_default_str();
    add_output_options(potential, opts);

    CLI::App* boundstates = app.add_subcommand("boundstates", "List the shared bound levels");
    int bs_n = 2;
    boundstates->add_option("--n", bs_n, "Well index")->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(boundstates, opts);

    CLI::App* scatter = app.add_subcommand("scatter", "Phase shifts along a kappa grid");
    scatter->add_option("--n", n, "Well index")->check(CLI::PositiveNumber)
        ->capture_default_str();
    scatter->add_option("--kappa-min", kappa_grid.min, "Smallest momentum")
        ->capture_default_str();
    scatter->add_option("--kappa-max", kappa_grid.max, "Largest momentum")
        ->capture_default_str();
    scatter->add_option("--kappa-count", kappa_grid.count, "Grid size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scatter->add_option("--step", ode_step, "Integrator step")->capture_default_str();
    scatter->add_option("--r-max", r_match, "Matching radius")->capture_default_str();
    add_output_options(scatter, opts);

    CLI::App* phase_equiv =
        app.add_subcommand("phase-equiv", "Rebuild the singular partner from overlap data");
    phase_equiv->add_option("--n", n, "Well index")->check(CLI::PositiveNumber)
        ->capture_default_str();
    phase_equiv->add_option("--r-max", r_max, "Largest radius")->capture_default_str();
    phase_equiv->add_option("--step", table_step, "Radial step")->capture_default_str();
    add_output_options(phase_equiv, opts);

    CLI::App* identity = app.add_subcommand("identity", "Evaluate both closed-form identities");
    identity->add_option("--n", n, "Well index")->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(identity, opts);

    CLI::App* verify = app.add_subcommand("verify-all", "Run the verification suite");
    int verify_n = 3;
    verify->add_option("--n", verify_n, "Largest well index")->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--kappa-min", kappa_grid.min, "Smallest momentum")
        ->capture_default_str();
    verify->add_option("--kappa-max", kappa_grid.max, "Largest momentum")
        ->capture_default_str();
    verify->add_option("--kappa-count", kappa_grid.count, "Grid size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--r-max", r_match, "Matching radius")->capture_default_str();
    verify->add_option("--step", ode_step, "Integrator step")->capture_default_str();
    verify->add_option("--tol", tol_raw, "Override a check tolerance as NAME=VALUE")
        ->take_all();
    add_output_options(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (potential->parsed()) return run_potential(n, r_max, table_step, opts);
        if (boundstates->parsed()) return run_boundstates(bs_n, opts);
        if (scatter->parsed()) return run_scatter(n, kappa_grid, ode_step, r_match, opts);
        if (phase_equiv->parsed()) return run_phase_equiv(n, r_max, table_step, opts);
        if (identity->parsed()) return run_identity(n, opts);
        if (verify->parsed()) {
            susyqm::RunConfig config;
            config.n_max = verify_n;
            config.kappa = kappa_grid;
            config.r_max = r_match;
            config.step = ode_step;
            if (!parse_tolerance_overrides(tol_raw, config.tolerance_overrides))
                return kExitUsage;
            return run_verify_all(config, opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
