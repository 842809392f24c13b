#include "qdsim/discord.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qdsim/errors.hpp"
#include "qdsim/qmath.hpp"

#include <nlohmann/json.hpp>

namespace qdsim {

namespace {

constexpr double kRouteAgreementTol = 1e-6;
constexpr double kNegativeClamp = 1e-9;
constexpr int kRefinePoints = 65;

void validate_config(const OptimizerConfig& cfg) {
    if (cfg.coarse_theta_steps < 3 || cfg.coarse_phi_steps < 3) {
        throw DomainError("optimizer: coarse grid needs at least 3 steps per axis");
    }
    if (!(cfg.refine_shrink > 0.0 && cfg.refine_shrink < 1.0)) {
        throw DomainError("optimizer: shrink factor must lie in (0, 1)");
    }
    if (cfg.refine_rounds < 0 || !(cfg.tolerance >= 0.0)) {
        throw DomainError("optimizer: bad refinement settings");
    }
}

double wrap_phi(double phi) {
    const double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    if (phi >= two_pi) phi = 0.0;
    return phi;
}

double clamp_discord(double v, const char* who) {
    if (v < -kNegativeClamp) {
        throw DomainError(std::string(who) + ": negative value " +
                          std::to_string(v));
    }
    return std::max(v, 0.0);
}

// I(rho^x) for the weak POVM at the given basis.
double post_weak_mutual_info(const Matrix& rho4, const MeasurementBasis& basis,
                             double x) {
    const WeakPovm povm = weak_povm(basis, x);
    return detail::mutual_info_bits(
        detail::sandwich_b(rho4, {povm.p_plus, povm.p_minus}));
}

// I(rho') for the projective measurement at the given basis.
double post_projective_mutual_info(const Matrix& rho4,
                                   const MeasurementBasis& basis) {
    auto [pi1, pi2] = projectors(basis);
    return detail::mutual_info_bits(detail::sandwich_b(rho4, {pi1, pi2}));
}

}  // namespace

double mutual_information(const DensityOperator& rho) {
    if (rho.dim() != 4) {
        throw DimensionError("mutual_information: two-qubit state required");
    }
    return detail::mutual_info_bits(rho.matrix());
}

double classical_correlation(const DensityOperator& rho,
                             const MeasurementBasis& basis) {
    const double s_a =
        detail::entropy_bits(partial_trace(rho.matrix(), {2, 2}, {0}));
    return s_a - conditional_entropy_projective(rho, basis);
}

BasisOptimum optimize_basis(
    const std::function<double(const MeasurementBasis&)>& objective,
    const OptimizerConfig& cfg) {
    validate_config(cfg);
    const double pi = std::numbers::pi;

    auto eval = [&](double theta, double phi) {
        const double v = objective({theta, phi});
        if (!std::isfinite(v)) {
            throw DomainError("optimize_basis: objective is not finite");
        }
        return v;
    };

    BasisOptimum best{{0.0, 0.0}, -std::numeric_limits<double>::infinity()};
    for (int i = 0; i < cfg.coarse_theta_steps; ++i) {
        const double theta = pi * i / (cfg.coarse_theta_steps - 1);
        for (int k = 0; k < cfg.coarse_phi_steps; ++k) {
            const double phi = 2.0 * pi * k / cfg.coarse_phi_steps;
            const double v = eval(theta, phi);
            if (v > best.value) best = {{theta, phi}, v};
        }
    }

    // Shrinking-window refinement around the incumbent; the first window
    // spans one coarse cell in each direction.
    double half_theta = pi / (cfg.coarse_theta_steps - 1);
    double half_phi = 2.0 * pi / cfg.coarse_phi_steps;
    bool converged = cfg.refine_rounds == 0;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
        const BasisOptimum center = best;
        for (int i = 0; i < kRefinePoints; ++i) {
            const double theta = std::clamp(
                center.basis.theta - half_theta +
                    2.0 * half_theta * i / (kRefinePoints - 1),
                0.0, pi);
            for (int k = 0; k < kRefinePoints; ++k) {
                const double phi =
                    wrap_phi(center.basis.phi - half_phi +
                             2.0 * half_phi * k / (kRefinePoints - 1));
                const double v = eval(theta, phi);
                if (v > best.value) best = {{theta, phi}, v};
            }
        }
        half_theta *= cfg.refine_shrink;
        half_phi *= cfg.refine_shrink;
        if (best.value - center.value <= cfg.tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw ConvergenceError(
            "optimize_basis: still improving after " +
                std::to_string(cfg.refine_rounds) + " refinement rounds",
            best);
    }
    return best;
}

DiscordReport quantum_discord(const DensityOperator& rho,
                              const OptimizerConfig& cfg) {
    const double info = mutual_information(rho);
    const double s_a =
        detail::entropy_bits(partial_trace(rho.matrix(), {2, 2}, {0}));

    const BasisOptimum via_j = optimize_basis(
        [&](const MeasurementBasis& b) {
            return s_a - conditional_entropy_projective(rho, b);
        },
        cfg);
    const BasisOptimum via_post = optimize_basis(
        [&](const MeasurementBasis& b) {
            return post_projective_mutual_info(rho.matrix(), b);
        },
        cfg);

    const double qd_j = clamp_discord(info - via_j.value, "quantum_discord");
    const double qd_post = clamp_discord(info - via_post.value, "quantum_discord");
    if (std::abs(qd_j - qd_post) > kRouteAgreementTol) {
        throw ConvergenceError(
            "quantum_discord: conditional-entropy and post-measurement routes "
            "disagree by " + std::to_string(std::abs(qd_j - qd_post)),
            via_j);
    }

    DiscordReport report;
    report.total_mutual_info = info;
    report.classical_corr = via_j.value;
    report.post_mutual_info = via_post.value;
    report.qd = qd_j;
    report.opt_basis = via_j.basis;
    report.opt_value = via_j.value;
    return report;
}

DiscordReport super_quantum_discord(const DensityOperator& rho, double x,
                                    const OptimizerConfig& cfg) {
    const double info = mutual_information(rho);
    const double s_a =
        detail::entropy_bits(partial_trace(rho.matrix(), {2, 2}, {0}));

    const BasisOptimum via_jx = optimize_basis(
        [&](const MeasurementBasis& b) {
            return s_a - conditional_entropy_weak(rho, weak_povm(b, x));
        },
        cfg);
    const BasisOptimum via_j = optimize_basis(
        [&](const MeasurementBasis& b) {
            return s_a - conditional_entropy_projective(rho, b);
        },
        cfg);

    DiscordReport report;
    report.x = x;
    report.total_mutual_info = info;
    report.classical_corr = via_jx.value;
    report.post_mutual_info =
        post_weak_mutual_info(rho.matrix(), via_jx.basis, x);
    report.qd = clamp_discord(info - via_j.value, "quantum_discord");
    report.sqd = clamp_discord(info - via_jx.value, "super_quantum_discord");
    report.opt_basis = via_jx.basis;
    report.opt_value = via_jx.value;
    return report;
}

DiscordReport weak_quantum_discord(const DensityOperator& rho, double x,
                                   const OptimizerConfig& cfg) {
    const double info = mutual_information(rho);
    const double s_a =
        detail::entropy_bits(partial_trace(rho.matrix(), {2, 2}, {0}));

    const BasisOptimum via_post = optimize_basis(
        [&](const MeasurementBasis& b) {
            return post_weak_mutual_info(rho.matrix(), b, x);
        },
        cfg);
    const BasisOptimum via_j = optimize_basis(
        [&](const MeasurementBasis& b) {
            return s_a - conditional_entropy_projective(rho, b);
        },
        cfg);

    DiscordReport report;
    report.x = x;
    report.total_mutual_info = info;
    report.classical_corr =
        s_a - conditional_entropy_weak(rho, weak_povm(via_post.basis, x));
    report.post_mutual_info = via_post.value;
    report.qd = clamp_discord(info - via_j.value, "quantum_discord");
    report.wqd = clamp_discord(info - via_post.value, "weak_quantum_discord");
    report.opt_basis = via_post.basis;
    report.opt_value = via_post.value;
    return report;
}

namespace detail {

double mutual_info_bits(const Matrix& rho4) {
    const Matrix a = partial_trace(rho4, {2, 2}, {0});
    const Matrix b = partial_trace(rho4, {2, 2}, {1});
    const double i =
        entropy_bits(a) + entropy_bits(b) - entropy_bits(rho4);
    return std::max(i, 0.0);
}

}  // namespace detail

nlohmann::json report_to_json(const DiscordReport& report) {
    nlohmann::json doc{
        {"total_mutual_info", report.total_mutual_info},
        {"classical_corr", report.classical_corr},
        {"post_mutual_info", report.post_mutual_info},
        {"qd", report.qd},
        {"opt_basis",
         {{"theta", report.opt_basis.theta}, {"phi", report.opt_basis.phi}}},
        {"opt_value", report.opt_value},
    };
    doc["x"] = report.x ? nlohmann::json(*report.x) : nlohmann::json();
    doc["sqd"] = report.sqd ? nlohmann::json(*report.sqd) : nlohmann::json();
    doc["wqd"] = report.wqd ? nlohmann::json(*report.wqd) : nlohmann::json();
    return doc;
}

}  // namespace qdsim
