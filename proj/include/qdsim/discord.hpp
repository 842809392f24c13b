#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "qdsim/density_operator.hpp"
#include "qdsim/measure.hpp"

#include <nlohmann/json_fwd.hpp>

namespace qdsim {

// Coarse grid scan over theta x phi followed by shrinking-window grid
// refinement. Defaults keep the coarse cell under ~3 degrees.
struct OptimizerConfig {
    int coarse_theta_steps = 61;   // over [0, pi], endpoints included
    int coarse_phi_steps = 121;    // over [0, 2 pi)
    int refine_rounds = 6;
    double refine_shrink = 0.25;
    double tolerance = 1e-10;
};

struct BasisOptimum {
    MeasurementBasis basis;
    double value = 0.0;
};

// Raised when the refinement loop is still improving by more than the
// configured tolerance after the last round; carries the incumbent.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, BasisOptimum best)
        : std::runtime_error(what), best_so_far(best) {}
    BasisOptimum best_so_far;
};

// One (state, strength) evaluation. `x` is absent for purely projective
// reports; sqd/wqd are present only for the corresponding quantifier.
struct DiscordReport {
    std::optional<double> x;
    double total_mutual_info = 0.0;  // I(rho_AB)
    double classical_corr = 0.0;     // max J or max J_x
    double post_mutual_info = 0.0;   // I(rho'_AB) or I(rho^x_AB)
    double qd = 0.0;
    std::optional<double> sqd;
    std::optional<double> wqd;
    MeasurementBasis opt_basis;
    double opt_value = 0.0;
};

// S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_information(const DensityOperator& rho);

// J(rho_{A|B}) = S(rho_A) - S(rho_{A|B}) at a fixed basis.
double classical_correlation(const DensityOperator& rho,
                             const MeasurementBasis& basis);

// Maximizes a finite objective over the basis domain. Deterministic
// tie-break: smallest theta, then smallest phi.
BasisOptimum optimize_basis(
    const std::function<double(const MeasurementBasis&)>& objective,
    const OptimizerConfig& cfg = {});

// QD = I(rho_AB) - max J. Also optimizes the post-measurement
// mutual-information route and checks the two agree within 1e-6.
DiscordReport quantum_discord(const DensityOperator& rho,
                              const OptimizerConfig& cfg = {});

// SQD = I(rho_AB) - max J_x, the conditional-entropy route with the weak
// POVM of strength x.
DiscordReport super_quantum_discord(const DensityOperator& rho, double x,
                                    const OptimizerConfig& cfg = {});

// WQD = I(rho_AB) - max I(rho^x_AB), the post-measurement
// mutual-information route with the weak POVM of strength x.
DiscordReport weak_quantum_discord(const DensityOperator& rho, double x,
                                   const OptimizerConfig& cfg = {});

nlohmann::json report_to_json(const DiscordReport& report);

namespace detail {

// S(rho_A) + S(rho_B) - S(rho_AB) of a raw 4x4 matrix, clamped at 0.
double mutual_info_bits(const Matrix& rho4);

}  // namespace detail

}  // namespace qdsim
