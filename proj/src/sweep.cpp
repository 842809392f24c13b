#include "qdsim/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qdsim/channels.hpp"
#include "qdsim/errors.hpp"
#include "qdsim/measure.hpp"
#include "qdsim/qmath.hpp"

namespace qdsim {

namespace {

const MeasurementBasis kSimplifiedBasis{std::numbers::pi, std::numbers::pi};

void validate_grid(const std::vector<double>& grid) {
    double prev = -1.0;
    for (double x : grid) {
        if (!std::isfinite(x) || x < 0.0 || x > kMaxWeakStrength) {
            throw DomainError("sweep: x values must lie in [0, 30]");
        }
        if (x <= prev) {
            throw DomainError("sweep: x grid must be strictly ascending");
        }
        prev = x;
    }
}

// Measured state for one candidate basis: the phase damping channel at
// lambda acts on qubit B in the frame of that basis, realized either in
// Kraus form or through the ancilla circuit.
Matrix channel_measured_state(const Matrix& rho4, const MeasurementBasis& basis,
                              double lambda, Pathway pathway) {
    const Matrix u = basis_unitary(basis);
    const Matrix rotated = detail::sandwich_b(rho4, {u.adjoint()});
    Matrix damped;
    if (pathway == Pathway::kKrausChannel) {
        damped = detail::sandwich_b(rotated, phase_damping_kraus(lambda).kraus_ops);
    } else {
        damped = apply_dilation_circuit(dilation_gates(lambda), rotated, 1);
    }
    return detail::sandwich_b(damped, {u});
}

// Weak-measurement statistics read off the measured state. The POVM
// elements are diagonal in the measurement basis, so the diagonal blocks
// the statistics depend on are untouched by the damping and the values
// match the direct POVM route.
double conditional_entropy_from(const Matrix& sigma, const MeasurementBasis& b,
                                double x) {
    const WeakPovm povm = weak_povm(b, x);
    return detail::weighted_conditional_entropy(
        sigma, {povm.p_plus * povm.p_plus, povm.p_minus * povm.p_minus});
}

struct QuantifierPoint {
    double value = 0.0;
    MeasurementBasis basis;
};

void check_row_ordering(const SweepRow& row) {
    if (row.wqd > row.qd + 1e-6 || row.qd > row.sqd + 1e-6) {
        throw DomainError("sweep: quantifier ordering WQD <= QD <= SQD violated");
    }
}

std::string format_csv_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

StateSpec StateSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("state spec: expected werner:z or bd:c1,c2,c3");
    }
    const std::string kind = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    StateSpec spec;
    std::istringstream in(args);
    char sep = ',';
    if (kind == "werner") {
        spec.kind = Kind::kWerner;
        if (!(in >> spec.z) || in.rdbuf()->in_avail() != 0) {
            throw std::invalid_argument("state spec: werner:z takes one real");
        }
    } else if (kind == "bd" || kind == "bell-diagonal") {
        spec.kind = Kind::kBellDiagonal;
        char sep2 = ',';
        if (!(in >> spec.c.c1 >> sep >> spec.c.c2 >> sep2 >> spec.c.c3) ||
            sep != ',' || sep2 != ',' || in.rdbuf()->in_avail() != 0) {
            throw std::invalid_argument("state spec: bd:c1,c2,c3 takes three reals");
        }
    } else {
        throw std::invalid_argument("state spec: unknown family '" + kind + "'");
    }
    return spec;
}

DensityOperator StateSpec::make() const {
    if (kind == Kind::kWerner) return werner(z);
    return bell_diagonal(c);
}

std::string StateSpec::describe() const {
    std::ostringstream out;
    if (kind == Kind::kWerner) {
        out << "werner(z=" << z << ")";
    } else {
        out << "bell-diagonal(c=" << c.c1 << "," << c.c2 << "," << c.c3 << ")";
    }
    return out.str();
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    validate_grid(cfg.x_grid);
    const DensityOperator rho = cfg.state.make();
    const DiscordReport qd_report = quantum_discord(rho, cfg.optimizer);
    std::vector<SweepRow> rows;
    rows.reserve(cfg.x_grid.size());
    for (double x : cfg.x_grid) {
        const double lambda = lambda_from_x(x);

        QuantifierPoint sqd_point, wqd_point;
        if (cfg.pathway == Pathway::kDirectWeakPovm) {
            const DiscordReport s = super_quantum_discord(rho, x, cfg.optimizer);
            const DiscordReport w = weak_quantum_discord(rho, x, cfg.optimizer);
            sqd_point = {*s.sqd, s.opt_basis};
            wqd_point = {*w.wqd, w.opt_basis};
        } else {
            auto sigma_of = [&](const MeasurementBasis& b) {
                return channel_measured_state(rho.matrix(), b, lambda,
                                              cfg.pathway);
            };
            const double marginal_entropy = detail::entropy_bits(
                partial_trace(rho.matrix(), {2, 2}, {0}));
            const BasisOptimum jx = optimize_basis(
                [&](const MeasurementBasis& b) {
                    return marginal_entropy -
                           conditional_entropy_from(sigma_of(b), b, x);
                },
                cfg.optimizer);
            const BasisOptimum ix = optimize_basis(
                [&](const MeasurementBasis& b) {
                    return detail::mutual_info_bits(sigma_of(b));
                },
                cfg.optimizer);
            sqd_point = {
                std::max(0.0, qd_report.total_mutual_info - jx.value), jx.basis};
            wqd_point = {
                std::max(0.0, qd_report.total_mutual_info - ix.value), ix.basis};
        }

        // Channel output vs the direct POVM back-action at the (pi, pi)
        // basis; 1 in simulation for every pathway.
        const WeakPovm ref_povm = weak_povm(kSimplifiedBasis, x);
        const DensityOperator ideal(detail::sandwich_b(
            rho.matrix(), {ref_povm.p_plus, ref_povm.p_minus}));
        const DensityOperator produced =
            cfg.pathway == Pathway::kDirectWeakPovm
                ? ideal
                : DensityOperator(channel_measured_state(
                      rho.matrix(), kSimplifiedBasis, lambda, cfg.pathway));

        SweepRow row;
        row.x = x;
        row.lambda = lambda;
        row.qd = qd_report.qd;
        row.sqd = sqd_point.value;
        row.wqd = wqd_point.value;
        row.total_mutual_info = qd_report.total_mutual_info;
        row.theta_opt_sqd = sqd_point.basis.theta;
        row.phi_opt_sqd = sqd_point.basis.phi;
        row.theta_opt_wqd = wqd_point.basis.theta;
        row.phi_opt_wqd = wqd_point.basis.phi;
        row.fidelity_vs_ideal = fidelity(ideal, produced);
        check_row_ordering(row);
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "x,lambda,qd,sqd,wqd,total_mutual_info,theta_opt_sqd,phi_opt_sqd,"
           "theta_opt_wqd,phi_opt_wqd,fidelity_vs_ideal\n";
    for (const SweepRow& r : rows) {
        out << format_csv_value(r.x) << ',' << format_csv_value(r.lambda) << ','
            << format_csv_value(r.qd) << ',' << format_csv_value(r.sqd) << ','
            << format_csv_value(r.wqd) << ','
            << format_csv_value(r.total_mutual_info) << ','
            << format_csv_value(r.theta_opt_sqd) << ','
            << format_csv_value(r.phi_opt_sqd) << ','
            << format_csv_value(r.theta_opt_wqd) << ','
            << format_csv_value(r.phi_opt_wqd) << ','
            << format_csv_value(r.fidelity_vs_ideal) << '\n';
    }
}

std::vector<double> table1_x_grid() {
    return {0.00, 0.34, 0.55, 0.75, 0.95, 1.20, 1.50, 1.75,
            2.00, 2.50, 3.00, 3.50, 4.00, 4.50, 5.00};
}

std::vector<double> dense_x_grid(int n) {
    if (n < 0) throw DomainError("dense_x_grid: n must be >= 0");
    std::vector<double> grid;
    grid.reserve(n);
    if (n == 1) {
        grid.push_back(0.0);
        return grid;
    }
    for (int i = 0; i < n; ++i) {
        grid.push_back(5.0 * i / (n - 1));
    }
    return grid;
}

Pathway pathway_from_name(const std::string& name) {
    if (name == "direct" || name == "direct-weak-povm") {
        return Pathway::kDirectWeakPovm;
    }
    if (name == "kraus" || name == "kraus-channel") {
        return Pathway::kKrausChannel;
    }
    if (name == "dilation" || name == "ancilla-dilation") {
        return Pathway::kAncillaDilation;
    }
    throw std::invalid_argument("pathway: expected direct, kraus or dilation");
}

std::string pathway_name(Pathway p) {
    switch (p) {
        case Pathway::kDirectWeakPovm: return "direct-weak-povm";
        case Pathway::kKrausChannel: return "kraus-channel";
        default: return "ancilla-dilation";
    }
}

}  // namespace qdsim
