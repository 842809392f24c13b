#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qdsim/density_operator.hpp"
#include "qdsim/discord.hpp"
#include "qdsim/states.hpp"

namespace qdsim {

// Which realization of the weak measurement produces the measured state:
// the POVM applied directly, the phase damping channel in Kraus form, or
// the same channel run through the ancilla dilation circuit. The channel
// acts on qubit B in the basis under optimization.
enum class Pathway {
    kDirectWeakPovm,
    kKrausChannel,
    kAncillaDilation,
};

struct StateSpec {
    enum class Kind { kWerner, kBellDiagonal };
    Kind kind = Kind::kWerner;
    double z = 0.0;
    BellDiagonalParams c;

    static StateSpec parse(const std::string& text);  // "werner:0.8", "bd:1,-1,1"
    DensityOperator make() const;
    std::string describe() const;
};

struct SweepConfig {
    StateSpec state;
    std::vector<double> x_grid;  // sorted ascending, all <= 30
    Pathway pathway = Pathway::kDirectWeakPovm;
    OptimizerConfig optimizer;
};

struct SweepRow {
    double x = 0.0;
    double lambda = 0.0;
    double qd = 0.0;
    double sqd = 0.0;
    double wqd = 0.0;
    double total_mutual_info = 0.0;
    double theta_opt_sqd = 0.0;
    double phi_opt_sqd = 0.0;
    double theta_opt_wqd = 0.0;
    double phi_opt_wqd = 0.0;
    double fidelity_vs_ideal = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

// Comma-separated, header row, LF endings, 12 significant digits.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Reference strength grid {0, 0.34, 0.55, ..., 5.0}, the default for
// sweeps (selected on the CLI as --x-grid table1).
std::vector<double> table1_x_grid();

// n uniform points on [0, 5].
std::vector<double> dense_x_grid(int n);

Pathway pathway_from_name(const std::string& name);
std::string pathway_name(Pathway p);

}  // namespace qdsim
