// Command-line front end: sweeps the discord quantifiers over measurement
// strength, runs the verification suites, and prints state presets.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdsim/discord.hpp"
#include "qdsim/errors.hpp"
#include "qdsim/qmath.hpp"
#include "qdsim/states.hpp"
#include "qdsim/sweep.hpp"
#include "qdsim/verify.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string resolve_preset(const std::string& name) {
    if (name == "werner-paper") return "werner:0.8";
    if (name == "bd-paper") return "bd:1,-1,1";
    return name;
}

qdsim::OptimizerConfig optimizer_from_env() {
    qdsim::OptimizerConfig cfg;
    if (const char* v = std::getenv("QDSIM_COARSE_THETA_STEPS")) {
        cfg.coarse_theta_steps = std::stoi(v);
    }
    if (const char* v = std::getenv("QDSIM_COARSE_PHI_STEPS")) {
        cfg.coarse_phi_steps = std::stoi(v);
    }
    if (const char* v = std::getenv("QDSIM_REFINE_ROUNDS")) {
        cfg.refine_rounds = std::stoi(v);
    }
    return cfg;
}

std::vector<double> parse_x_grid(const std::string& text) {
    if (text == "table1") return qdsim::table1_x_grid();
    if (text.rfind("dense:", 0) == 0) {
        return qdsim::dense_x_grid(std::stoi(text.substr(6)));
    }
    throw std::invalid_argument("x-grid: expected 'table1' or 'dense:N'");
}

int run_sweep_cmd(const std::string& state, const std::string& pathway,
                  const std::string& x_grid, const std::string& out_path) {
    qdsim::SweepConfig cfg;
    cfg.state = qdsim::StateSpec::parse(resolve_preset(state));
    cfg.pathway = qdsim::pathway_from_name(pathway);
    cfg.x_grid = parse_x_grid(x_grid);
    cfg.optimizer = optimizer_from_env();

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitDomain;
    }

    const auto rows = qdsim::run_sweep(cfg);
    qdsim::write_csv(out, rows);
    out.close();
    if (!out) {
        std::cerr << "error: failed writing " << out_path << "\n";
        return kExitDomain;
    }

    std::cout << "state    " << cfg.state.describe() << "\n"
              << "pathway  " << qdsim::pathway_name(cfg.pathway) << "\n"
              << "rows     " << rows.size() << " -> " << out_path << "\n";
    if (!rows.empty()) {
        std::cout << std::setprecision(6) << "x range  [" << rows.front().x
                  << ", " << rows.back().x << "],  qd " << rows.front().qd
                  << ",  sqd " << rows.front().sqd << " -> " << rows.back().sqd
                  << ",  wqd " << rows.front().wqd << " -> " << rows.back().wqd
                  << "\n";
    }
    return 0;
}

int run_verify_cmd(const std::string& suite) {
    std::vector<qdsim::CheckResult> results;
    if (suite == "povm") {
        results = qdsim::verify_povm();
    } else if (suite == "channel") {
        results = qdsim::verify_channel();
    } else if (suite == "dilation") {
        results = qdsim::verify_dilation();
    } else if (suite == "discord") {
        results = qdsim::verify_discord();
    } else if (suite == "all") {
        results = qdsim::verify_all();
    } else {
        std::cerr << "error: unknown suite '" << suite
                  << "' (expected povm, channel, dilation, discord, all)\n";
        return kExitUsage;
    }
    qdsim::print_results(std::cout, results);
    const bool ok = qdsim::all_passed(results);
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? 0 : kExitVerifyFailure;
}

int run_state_cmd(const std::string& spec_text, bool as_json) {
    const qdsim::StateSpec spec =
        qdsim::StateSpec::parse(resolve_preset(spec_text));
    const qdsim::DensityOperator rho = spec.make();
    const auto spectrum = qdsim::eigh(rho.matrix());
    const qdsim::DensityOperator marg_a(
        qdsim::partial_trace(rho.matrix(), {2, 2}, {0}));
    const qdsim::DensityOperator marg_b(
        qdsim::partial_trace(rho.matrix(), {2, 2}, {1}));
    const double info = qdsim::mutual_information(rho);
    const qdsim::DiscordReport qd =
        qdsim::quantum_discord(rho, optimizer_from_env());

    if (as_json) {
        nlohmann::json doc{
            {"state", qdsim::state_to_json(rho)},
            {"eigenvalues", std::vector<double>(
                                spectrum.eigenvalues.data(),
                                spectrum.eigenvalues.data() +
                                    spectrum.eigenvalues.size())},
            {"marginal_a", qdsim::state_to_json(marg_a)},
            {"marginal_b", qdsim::state_to_json(marg_b)},
            {"mutual_information", info},
            {"discord", qdsim::report_to_json(qd)},
        };
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << spec.describe() << "\n\nrho =\n"
              << std::setprecision(6) << rho.matrix() << "\n\neigenvalues: ";
    for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i) {
        std::cout << spectrum.eigenvalues[i] << (i + 1 < spectrum.eigenvalues.size() ? ", " : "\n");
    }
    std::cout << "\nrho_A =\n" << marg_a.matrix() << "\n\nrho_B =\n"
              << marg_b.matrix() << "\n\n"
              << "I(rho_AB)      = " << info << " bits\n"
              << "max J          = " << qd.classical_corr << " bits\n"
              << "QD             = " << qd.qd << " bits\n"
              << "optimal basis  theta = " << qd.opt_basis.theta
              << ", phi = " << qd.opt_basis.phi << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit weak-measurement discord simulator"};
    app.require_subcommand(1);

    std::string sweep_state, sweep_pathway = "direct", sweep_grid = "table1";
    std::string sweep_out;
    auto* sweep = app.add_subcommand(
        "sweep", "Sweep QD/SQD/WQD over measurement strength, write a CSV");
    sweep->add_option("--state", sweep_state,
                      "werner:z | bd:c1,c2,c3 | werner-paper | bd-paper")
        ->required();
    sweep->add_option("--pathway", sweep_pathway,
                      "direct | kraus | dilation");
    sweep->add_option("--x-grid", sweep_grid, "table1 | dense:N");
    sweep->add_option("--out", sweep_out, "output CSV path")->required();

    std::string verify_suite;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", verify_suite, "povm | channel | dilation | discord | all")
        ->required();

    std::string state_spec;
    bool state_json = false;
    auto* state = app.add_subcommand("state", "Print a state and its correlations");
    state->add_option("spec", state_spec,
                      "werner:z | bd:c1,c2,c3 | werner-paper | bd-paper")
        ->required();
    state->add_flag("--json", state_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            return run_sweep_cmd(sweep_state, sweep_pathway, sweep_grid, sweep_out);
        }
        if (verify->parsed()) {
            return run_verify_cmd(verify_suite);
        }
        return run_state_cmd(state_spec, state_json);
    } catch (const qdsim::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const qdsim::DimensionError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
