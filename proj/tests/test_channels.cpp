#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qdsim/channels.hpp"
#include "qdsim/errors.hpp"
#include "qdsim/measure.hpp"
#include "qdsim/qmath.hpp"
#include "qdsim/states.hpp"

using namespace qdsim;

namespace {

constexpr double kPi = std::numbers::pi;

DensityOperator random_two_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(std::move(rho));
}

}  // namespace

TEST_CASE("lambda from x") {
    CHECK(lambda_from_x(0.0) == 0.0);
    CHECK(lambda_from_x(1.2) == doctest::Approx(0.694980003792591).epsilon(1e-12));
    CHECK(std::abs(lambda_from_x(30.0) - 1.0) <= 1e-12);
    CHECK_THROWS_AS(lambda_from_x(-0.1), DomainError);
    CHECK_THROWS_AS(lambda_from_x(std::nan("")), DomainError);
}

TEST_CASE("x from lambda") {
    CHECK(x_from_lambda(0.0) == 0.0);
    CHECK(x_from_lambda(0.694980003792591) == doctest::Approx(1.2).epsilon(1e-10));
    // arcsech(0.5) = ln(2 + sqrt(3))
    CHECK(x_from_lambda(0.75) ==
          doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-12));
    CHECK_THROWS_AS(x_from_lambda(1.0), DomainError);
    CHECK_THROWS_AS(x_from_lambda(-0.2), DomainError);

    for (int i = 0; i < 99; ++i) {
        const double lambda = 0.99 * i / 98.0;
        CHECK(std::abs(lambda_from_x(x_from_lambda(lambda)) - lambda) <= 1e-12);
    }
}

TEST_CASE("phase damping kraus operators") {
    const KrausChannel none = phase_damping_kraus(0.0);
    CHECK(max_abs_diff(none.kraus_ops[0], Matrix::Identity(2, 2)) == 0.0);
    CHECK(none.kraus_ops[1].cwiseAbs().maxCoeff() == 0.0);

    const KrausChannel full = phase_damping_kraus(1.0);
    Matrix e0 = Matrix::Zero(2, 2), e1 = Matrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    e1(1, 1) = 1.0;
    CHECK(max_abs_diff(full.kraus_ops[0], e0) == 0.0);
    CHECK(max_abs_diff(full.kraus_ops[1], e1) == 0.0);

    for (int i = 0; i <= 100; ++i) {
        const KrausChannel ch = phase_damping_kraus(i / 100.0);
        const Matrix total = ch.kraus_ops[0].adjoint() * ch.kraus_ops[0] +
                             ch.kraus_ops[1].adjoint() * ch.kraus_ops[1];
        CHECK(max_abs_diff(total, Matrix::Identity(2, 2)) <= 1e-12);
    }

    CHECK_THROWS_AS(phase_damping_kraus(-0.1), DomainError);
    CHECK_THROWS_AS(phase_damping_kraus(1.0001), DomainError);
}

TEST_CASE("apply channel") {
    const DensityOperator rho = bloch_state({0.5, 0.3, 0.2});

    const DensityOperator same = apply_channel(phase_damping_kraus(0.0), rho, 0);
    CHECK(max_abs_diff(same.matrix(), rho.matrix()) == 0.0);

    for (double lambda : {0.25, 0.5, 0.9}) {
        const DensityOperator after =
            apply_channel(phase_damping_kraus(lambda), rho, 0);
        CHECK(std::abs(after.matrix()(0, 1) -
                       rho.matrix()(0, 1) * std::sqrt(1.0 - lambda)) <= 1e-15);
        CHECK(std::abs(after.matrix()(0, 0) - rho.matrix()(0, 0)) <= 1e-15);
        CHECK(std::abs(after.matrix()(1, 1) - rho.matrix()(1, 1)) <= 1e-15);
    }

    // Matches the weak back-action on qubit B at lambda = 1 - sech^2 x.
    const DensityOperator w = werner(0.8);
    const double x = 1.2;
    const DensityOperator via_povm =
        measure_b_weak(w, weak_povm({kPi, kPi}, x)).post_state;
    const DensityOperator via_pd =
        apply_channel(phase_damping_kraus(lambda_from_x(x)), w, 1);
    CHECK(trace_distance(via_povm, via_pd) <= 1e-12);

    CHECK_THROWS_AS(apply_channel(phase_damping_kraus(0.5), rho, 1),
                    DimensionError);
    CHECK_THROWS_AS(apply_channel(phase_damping_kraus(0.5), w, -1),
                    DimensionError);
}

TEST_CASE("channel on a three-qubit state") {
    const DensityOperator pps = pseudopure_3q(0.3);
    const DensityOperator after = apply_channel(phase_damping_kraus(0.7), pps, 2);
    // Diagonal input stays put under pure dephasing.
    CHECK(max_abs_diff(after.matrix(), pps.matrix()) <= 1e-14);
    CHECK_THROWS_AS(apply_channel(phase_damping_kraus(0.7), pps, 3),
                    DimensionError);
}

TEST_CASE("dilation gates") {
    // lambda = 0: V is I up to the sign of the second column; the rebuilt
    // Kraus pair is (I, 0).
    const DilationGates g0 = dilation_gates(0.0);
    CHECK(g0.v(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(g0.v(0, 1)) == 0.0);
    CHECK(g0.v(1, 1).real() == doctest::Approx(-1.0));
    const auto k0 = kraus_from_gates(g0);
    CHECK(max_abs_diff(k0[0], Matrix::Identity(2, 2)) <= 1e-15);
    CHECK(k0[1].cwiseAbs().maxCoeff() <= 1e-15);

    // lambda = 1: Hadamard-like entries of magnitude 1/sqrt(2).
    const DilationGates g1 = dilation_gates(1.0);
    const double inv_root2 = 1.0 / std::sqrt(2.0);
    CHECK(g1.v(0, 0).real() == doctest::Approx(inv_root2).epsilon(1e-12));
    CHECK(g1.v(0, 1).real() == doctest::Approx(inv_root2).epsilon(1e-12));
    CHECK(g1.v(1, 0).real() == doctest::Approx(inv_root2).epsilon(1e-12));
    CHECK(g1.v(1, 1).real() == doctest::Approx(-inv_root2).epsilon(1e-12));

    for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const DilationGates g = dilation_gates(lambda);
        CHECK(is_unitary(g.v, 1e-12));
        CHECK(is_unitary(g.w, 1e-12));
        CHECK(is_unitary(g.u0, 1e-12));
        CHECK(is_unitary(g.u1, 1e-12));
        const auto rebuilt = kraus_from_gates(g);
        const auto direct = phase_damping_kraus(lambda).kraus_ops;
        CHECK(max_abs_diff(rebuilt[0], direct[0]) <= 1e-12);
        CHECK(max_abs_diff(rebuilt[1], direct[1]) <= 1e-12);
    }

    CHECK_THROWS_AS(dilation_gates(1.5), DomainError);
}

TEST_CASE("dilation circuit equals kraus application") {
    const DensityOperator bd = bell_diagonal({1, -1, 1});
    CHECK(trace_distance(apply_via_dilation(0.0, bd, 1), bd) <= 1e-14);

    CHECK(trace_distance(apply_via_dilation(0.695, bd, 1),
                         apply_channel(phase_damping_kraus(0.695), bd, 1)) <=
          1e-12);

    const DensityOperator w = werner(0.8);
    for (double lambda : {0.0, 0.25, 0.5, 0.75, 0.99}) {
        CHECK(trace_distance(apply_via_dilation(lambda, w, 1),
                             apply_channel(phase_damping_kraus(lambda), w, 1)) <=
              1e-12);
    }

    // Both target qubits, random states.
    std::mt19937_64 rng(41);
    for (int i = 0; i < 5; ++i) {
        const DensityOperator rho = random_two_qubit(rng);
        for (int target : {0, 1}) {
            for (double lambda : {0.1, 0.6, 1.0}) {
                CHECK(trace_distance(
                          apply_via_dilation(lambda, rho, target),
                          apply_channel(phase_damping_kraus(lambda), rho,
                                        target)) <= 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(apply_via_dilation(-0.2, w, 1), DomainError);
    CHECK_THROWS_AS(apply_via_dilation(0.5, w, 2), DimensionError);
}

TEST_CASE("reinstating the half prefactor breaks the dilation") {
    DilationGates bad = dilation_gates(0.5);
    bad.v *= 0.5;
    bad.w *= 0.5;
    CHECK_FALSE(is_unitary(bad.v, 1e-12));

    const DensityOperator w = werner(0.8);
    const Matrix via_bad = apply_dilation_circuit(bad, w.matrix(), 1);
    const Matrix via_kraus =
        apply_channel(phase_damping_kraus(0.5), w, 1).matrix();
    CHECK(max_abs_diff(via_bad, via_kraus) > 1e-3);
    // Not even trace preserving.
    CHECK(std::abs(via_bad.trace().real() - 1.0) > 0.5);
}

TEST_CASE("pd composition is multiplicative in coherence") {
    const DensityOperator rho = bloch_state({0.7, 0.1, -0.3});
    for (double l1 : {0.2, 0.6}) {
        for (double l2 : {0.3, 0.8}) {
            const DensityOperator two = apply_channel(
                phase_damping_kraus(l2),
                apply_channel(phase_damping_kraus(l1), rho, 0), 0);
            const DensityOperator one = apply_channel(
                phase_damping_kraus(1.0 - (1.0 - l1) * (1.0 - l2)), rho, 0);
            CHECK(max_abs_diff(two.matrix(), one.matrix()) <= 1e-12);
        }
    }
}

TEST_CASE("rotation angle") {
    CHECK(rotation_angle_from_lambda(0.0) == 0.0);
    CHECK(rotation_angle_from_lambda(1.0) ==
          doctest::Approx(-kPi / 2.0).epsilon(1e-12));
    CHECK(rotation_angle_from_lambda(0.75) ==
          doctest::Approx(-kPi / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(rotation_angle_from_lambda(2.0), DomainError);
}
