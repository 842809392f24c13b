#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdsim/discord.hpp"
#include "qdsim/errors.hpp"
#include "qdsim/measure.hpp"
#include "qdsim/qmath.hpp"
#include "qdsim/states.hpp"

#include <nlohmann/json.hpp>

#include "support/oracles.hpp"

using namespace qdsim;

namespace {

constexpr double kPi = std::numbers::pi;
const MeasurementBasis kSimplified{kPi, kPi};

}  // namespace

TEST_CASE("mutual information") {
    const DensityOperator prod(
        kron(bloch_state({0.2, 0.1, 0.6}).matrix(),
             bloch_state({-0.4, 0.3, 0.1}).matrix()));
    CHECK(std::abs(mutual_information(prod)) <= 1e-10);

    CHECK(mutual_information(bell_diagonal({1, -1, 1})) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(mutual_information(werner(0.8)) ==
          doctest::Approx(1.152415320175426).epsilon(1e-12));
}

TEST_CASE("classical correlation") {
    const DensityOperator prod(
        kron(bloch_state({0.2, 0.1, 0.6}).matrix(),
             bloch_state({-0.4, 0.3, 0.1}).matrix()));
    CHECK(std::abs(classical_correlation(prod, {0.7, 1.9})) <= 1e-10);

    CHECK(classical_correlation(werner(0.8), kSimplified) ==
          doctest::Approx(0.531004406410719).epsilon(1e-12));
    CHECK(classical_correlation(werner(1.0), {2.0, 3.0}) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("basis optimizer") {
    // Constant objective resolves ties toward (0, 0).
    const BasisOptimum flat =
        optimize_basis([](const MeasurementBasis&) { return 1.0; });
    CHECK(flat.basis.theta == 0.0);
    CHECK(flat.basis.phi == 0.0);
    CHECK(flat.value == 1.0);

    // A smooth peak away from the grid is located accurately.
    const BasisOptimum peak = optimize_basis([](const MeasurementBasis& b) {
        const double dt = b.theta - 1.234;
        const double dp = b.phi - 2.345;
        return -(dt * dt + 0.5 * dp * dp);
    });
    CHECK(peak.basis.theta == doctest::Approx(1.234).epsilon(1e-5));
    CHECK(peak.basis.phi == doctest::Approx(2.345).epsilon(1e-5));
    CHECK(peak.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));

    // Optimized J for the Werner preset equals its value at (pi, pi).
    const DensityOperator w = werner(0.8);
    const double s_a = 1.0;
    const BasisOptimum j_opt = optimize_basis([&](const MeasurementBasis& b) {
        return s_a - conditional_entropy_projective(w, b);
    });
    CHECK(j_opt.value ==
          doctest::Approx(classical_correlation(w, kSimplified)).epsilon(1e-9));

    // Same for J_x on the Bell-diagonal preset at x = 1.
    const DensityOperator bd = bell_diagonal({1, -1, 1});
    const BasisOptimum jx_opt = optimize_basis([&](const MeasurementBasis& b) {
        return 1.0 - conditional_entropy_weak(bd, weak_povm(b, 1.0));
    });
    const double jx_pi =
        1.0 - conditional_entropy_weak(bd, weak_povm(kSimplified, 1.0));
    CHECK(jx_opt.value == doctest::Approx(jx_pi).epsilon(1e-9));

    CHECK_THROWS_AS(
        optimize_basis([](const MeasurementBasis&) {
            return std::numeric_limits<double>::quiet_NaN();
        }),
        DomainError);
    OptimizerConfig bad;
    bad.coarse_theta_steps = 1;
    CHECK_THROWS_AS(optimize_basis([](const MeasurementBasis&) { return 0.0; }, bad),
                    DomainError);
}

TEST_CASE("optimizer flags non-convergence on a cusp") {
    // A square-root cusp keeps the per-round gain far above the tolerance,
    // so the refinement budget runs out while still improving.
    auto cusp = [](const MeasurementBasis& b) {
        return -std::sqrt(std::abs(b.theta - 1.0) + std::abs(b.phi - 2.0));
    };
    CHECK_THROWS_AS(optimize_basis(cusp), ConvergenceError);
    try {
        optimize_basis(cusp);
    } catch (const ConvergenceError& e) {
        CHECK(e.best_so_far.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-2));
        CHECK(e.best_so_far.basis.theta == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(e.best_so_far.basis.phi == doctest::Approx(2.0).epsilon(1e-3));
    }
}

TEST_CASE("quantum discord") {
    CHECK(quantum_discord(werner(0.0)).qd <= 1e-9);
    CHECK(quantum_discord(werner(1.0)).qd == doctest::Approx(1.0).epsilon(1e-9));

    const DiscordReport paper = quantum_discord(werner(0.8));
    CHECK(paper.qd == doctest::Approx(0.621410913764707).epsilon(1e-9));
    CHECK(paper.total_mutual_info ==
          doctest::Approx(1.152415320175426).epsilon(1e-12));
    CHECK(paper.classical_corr ==
          doctest::Approx(0.531004406410719).epsilon(1e-9));
    CHECK(std::abs(paper.classical_corr - paper.post_mutual_info) <= 1e-6);
    CHECK_FALSE(paper.x.has_value());
    CHECK_FALSE(paper.sqd.has_value());

    CHECK(quantum_discord(bell_diagonal({1, -1, 1})).qd ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("super quantum discord") {
    const DensityOperator w = werner(0.8);

    // x = 0 equals the total correlations.
    const DiscordReport at0 = super_quantum_discord(w, 0.0);
    CHECK(*at0.sqd ==
          doctest::Approx(at0.total_mutual_info).epsilon(1e-9));

    // Strong limit recovers QD.
    const DiscordReport at20 = super_quantum_discord(w, 20.0);
    CHECK(*at20.sqd == doctest::Approx(0.621410913764707).epsilon(1e-5));

    // Closed form at x = 1.2.
    const DiscordReport mid = super_quantum_discord(w, 1.2);
    CHECK(*mid.sqd == doctest::Approx(0.802139266281384).epsilon(1e-9));
    CHECK(*mid.sqd == doctest::Approx(oracle::werner_sqd(0.8, 1.2)).epsilon(1e-9));
    CHECK(*mid.sqd >= mid.qd - 1e-6);
    CHECK(*mid.x == 1.2);

    const DiscordReport bd0 = super_quantum_discord(bell_diagonal({1, -1, 1}), 0.0);
    CHECK(*bd0.sqd == doctest::Approx(2.0).epsilon(1e-9));

    CHECK_THROWS_AS(super_quantum_discord(w, -1.0), DomainError);
    CHECK_THROWS_AS(super_quantum_discord(w, 40.0), DomainError);
}

TEST_CASE("weak quantum discord") {
    const DensityOperator w = werner(0.8);

    CHECK(std::abs(*weak_quantum_discord(w, 0.0).wqd) <= 1e-9);

    const DiscordReport at20 = weak_quantum_discord(w, 20.0);
    CHECK(*at20.wqd == doctest::Approx(0.621410913764707).epsilon(1e-5));

    const DiscordReport mid = weak_quantum_discord(w, 1.2);
    CHECK(*mid.wqd == doctest::Approx(0.457965584770752).epsilon(1e-9));
    CHECK(*mid.wqd == doctest::Approx(oracle::werner_wqd(0.8, 1.2)).epsilon(1e-9));
    CHECK(*mid.wqd > 0.0);
    CHECK(*mid.wqd < 0.621410913764707);
    CHECK(*mid.wqd <= mid.qd + 1e-6);

    const DiscordReport bd = weak_quantum_discord(bell_diagonal({1, -1, 1}), 1.2);
    CHECK(*bd.wqd == doctest::Approx(oracle::bell_paper_wqd(1.2)).epsilon(1e-9));
}

TEST_CASE("wqd at x=1.2 matches the dense-grid oracle") {
    const DensityOperator w = werner(0.8);
    const double brute = oracle::wqd(w.matrix(), 1.2);
    CHECK(*weak_quantum_discord(w, 1.2).wqd ==
          doctest::Approx(brute).epsilon(1e-4));
}

TEST_CASE("ordering on a small strength grid") {
    for (const DensityOperator& rho :
         {werner(0.8), bell_diagonal({1, -1, 1}), bell_diagonal({0.7, -0.3, 0.2})}) {
        const double qd = quantum_discord(rho).qd;
        for (double x : {0.34, 1.2, 3.0}) {
            const double sqd = *super_quantum_discord(rho, x).sqd;
            const double wqd = *weak_quantum_discord(rho, x).wqd;
            CHECK(wqd <= qd + 1e-6);
            CHECK(qd <= sqd + 1e-6);
        }
    }
}

TEST_CASE("discord report json") {
    const DiscordReport r = super_quantum_discord(werner(0.8), 0.75);
    const nlohmann::json doc = report_to_json(r);
    CHECK(doc.at("x").get<double>() == 0.75);
    CHECK(doc.at("sqd").get<double>() == *r.sqd);
    CHECK(doc.at("wqd").is_null());
    CHECK(doc.at("qd").get<double>() == r.qd);
    CHECK(doc.at("opt_basis").at("theta").get<double>() == r.opt_basis.theta);
}
