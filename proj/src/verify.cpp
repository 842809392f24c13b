#include "qdsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "qdsim/discord.hpp"
#include "qdsim/measure.hpp"
#include "qdsim/qmath.hpp"
#include "qdsim/states.hpp"
#include "qdsim/sweep.hpp"

namespace qdsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned kSeed = 0x51ab5eedU;  // fixed so every run checks the same states

MeasurementBasis simplified_basis() { return {kPi, kPi}; }

double sech(double x) { return 1.0 / std::cosh(x); }

DensityOperator random_two_qubit_state(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            g(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(std::move(rho));
}

DensityOperator random_single_qubit_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    while (true) {
        const BlochVector v{uni(rng), uni(rng), uni(rng)};
        if (v.rx * v.rx + v.ry * v.ry + v.rz * v.rz <= 1.0) {
            return bloch_state(v);
        }
    }
}

BellDiagonalParams random_physical_bd(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    while (true) {
        const BellDiagonalParams p{uni(rng), uni(rng), uni(rng)};
        const double ev[4] = {
            (1 - p.c1 - p.c2 - p.c3) / 4, (1 - p.c1 + p.c2 + p.c3) / 4,
            (1 + p.c1 - p.c2 + p.c3) / 4, (1 + p.c1 + p.c2 - p.c3) / 4};
        if (std::all_of(std::begin(ev), std::end(ev),
                        [](double e) { return e >= 0.0; })) {
            return p;
        }
    }
}

Matrix random_single_qubit_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mix(0.0, kPi / 2.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    const double a = mix(rng), b = phase(rng), c = phase(rng);
    Matrix u(2, 2);
    u << std::polar(std::cos(a), b), std::polar(std::sin(a), c),
        -std::polar(std::sin(a), -c), std::polar(std::cos(a), -b);
    return u;
}

CheckResult make_result(std::string name, double max_error, double tol) {
    return CheckResult{std::move(name), max_error <= tol, max_error, tol};
}

}  // namespace

std::vector<CheckResult> verify_povm() {
    std::vector<CheckResult> out;

    // Completeness P(x)^dag P(x) + P(-x)^dag P(-x) = I on a 10x10x10 grid.
    {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                for (int k = 0; k < 10; ++k) {
                    const MeasurementBasis b{kPi * i / 9.0, 2.0 * kPi * j / 10.0};
                    const double x = 5.0 * k / 9.0;
                    const WeakPovm povm = weak_povm(b, x);
                    const Matrix total = povm.p_plus.adjoint() * povm.p_plus +
                                         povm.p_minus.adjoint() * povm.p_minus;
                    worst = std::max(
                        worst, max_abs_diff(total, Matrix::Identity(2, 2)));
                }
            }
        }
        out.push_back(make_result("povm completeness (10x10x10 grid)", worst, 1e-12));
    }

    std::mt19937_64 rng(kSeed);
    std::vector<DensityOperator> states;
    states.push_back(werner(0.8));
    states.push_back(bell_diagonal({1, -1, 1}));
    for (int i = 0; i < 4; ++i) states.push_back(random_two_qubit_state(rng));

    // Probabilities of both measurement kinds sum to 1.
    {
        double worst = 0.0;
        for (const auto& rho : states) {
            for (int i = 0; i < 5; ++i) {
                const MeasurementBasis b{kPi * i / 4.0, 2.0 * kPi * i / 5.0};
                const auto proj = measure_b_projective(rho, b);
                const auto weak = measure_b_weak(rho, weak_povm(b, 0.7 + i));
                double sum_p = 0.0, sum_w = 0.0;
                for (const auto& o : proj.outcomes) sum_p += o.probability;
                for (const auto& o : weak.outcomes) sum_w += o.probability;
                worst = std::max(
                    {worst, std::abs(sum_p - 1.0), std::abs(sum_w - 1.0)});
            }
        }
        out.push_back(make_result("outcome probabilities sum to 1", worst, 1e-10));
    }

    // Projective post-state carries no coherence between the two sectors.
    {
        double worst = 0.0;
        for (const auto& rho : states) {
            for (int i = 0; i < 5; ++i) {
                const MeasurementBasis b{kPi * (i + 1) / 6.0, kPi * i / 3.0};
                auto [pi1, pi2] = projectors(b);
                const Matrix post =
                    measure_b_projective(rho, b).post_state.matrix();
                const Matrix cross = kron(Matrix::Identity(2, 2), pi1) * post *
                                     kron(Matrix::Identity(2, 2), pi2);
                worst = std::max(worst, cross.cwiseAbs().maxCoeff());
            }
        }
        out.push_back(
            make_result("projective post-state block diagonal", worst, 1e-12));
    }

    // x = 0 leaves the state untouched.
    {
        double worst = 0.0;
        for (const auto& rho : states) {
            const MeasurementBasis b{0.4, 1.3};
            const Matrix post =
                measure_b_weak(rho, weak_povm(b, 0.0)).post_state.matrix();
            worst = std::max(worst, max_abs_diff(post, rho.matrix()));
        }
        out.push_back(
            make_result("weak measurement at x=0 is identity", worst, 1e-12));
    }

    // Weak post-state approaches the projective one, gap bounded by sech x.
    {
        double worst = 0.0;
        for (const auto& rho : states) {
            const auto proj = measure_b_projective(rho, simplified_basis());
            for (double x : {1.0, 2.0, 4.0, 8.0}) {
                const auto weak =
                    measure_b_weak(rho, weak_povm(simplified_basis(), x));
                const double dist =
                    trace_distance(weak.post_state, proj.post_state);
                worst = std::max(worst, dist - sech(x));
            }
        }
        out.push_back(make_result("weak -> projective convergence (<= sech x)",
                                  worst, 0.0));
    }

    // Conditional entropy decreases with measurement strength.
    {
        double worst = 0.0;
        for (const auto& rho : {werner(0.8), bell_diagonal({1, -1, 1})}) {
            double prev =
                conditional_entropy_weak(rho, weak_povm(simplified_basis(), 0.0));
            for (double x : table1_x_grid()) {
                if (x == 0.0) continue;
                const double cur =
                    conditional_entropy_weak(rho, weak_povm(simplified_basis(), x));
                worst = std::max(worst, cur - prev);
                prev = cur;
            }
        }
        out.push_back(make_result("S_x non-increasing in x", worst, 1e-12));
    }

    return out;
}

std::vector<CheckResult> verify_channel() {
    std::vector<CheckResult> out;

    // Trace preservation of the Kraus pair over a 101-point lambda grid.
    {
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const KrausChannel ch = phase_damping_kraus(i / 100.0);
            Matrix total = Matrix::Zero(2, 2);
            for (const Matrix& e : ch.kraus_ops) total += e.adjoint() * e;
            worst = std::max(worst, max_abs_diff(total, Matrix::Identity(2, 2)));
        }
        out.push_back(
            make_result("kraus trace preservation (101 lambdas)", worst, 1e-12));
    }

    // lambda <-> x round trip on a 99-point grid.
    {
        double worst = 0.0;
        for (int i = 0; i < 99; ++i) {
            const double lambda = 0.99 * i / 98.0;
            worst = std::max(
                worst, std::abs(lambda_from_x(x_from_lambda(lambda)) - lambda));
        }
        out.push_back(
            make_result("lambda <-> x round trip (99 lambdas)", worst, 1e-12));
    }

    // Coherence scaling: the weak POVM shrinks off-diagonals by sech x, the
    // channel by sqrt(1-lambda); with lambda = 1 - sech^2 x they coincide.
    {
        std::mt19937_64 rng(kSeed + 1);
        double worst_weak = 0.0, worst_pd = 0.0, worst_pair = 0.0;
        for (int i = 0; i < 10; ++i) {
            const DensityOperator rho = random_single_qubit_state(rng);
            for (double x : {0.3, 0.9, 1.7, 3.1, 4.6}) {
                const double lambda = lambda_from_x(x);
                const WeakPovm povm = weak_povm(simplified_basis(), x);
                const Matrix after_weak =
                    povm.p_plus * rho.matrix() * povm.p_plus.adjoint() +
                    povm.p_minus * rho.matrix() * povm.p_minus.adjoint();
                const DensityOperator after_pd =
                    apply_channel(phase_damping_kraus(lambda), rho, 0);

                worst_weak = std::max(
                    worst_weak,
                    std::abs(after_weak(0, 1) - rho.matrix()(0, 1) * sech(x)));
                worst_weak = std::max(
                    worst_weak, std::abs(after_weak(0, 0) - rho.matrix()(0, 0)));
                worst_pd = std::max(
                    worst_pd,
                    std::abs(after_pd.matrix()(0, 1) -
                             rho.matrix()(0, 1) * std::sqrt(1.0 - lambda)));
                worst_pd = std::max(worst_pd, std::abs(after_pd.matrix()(1, 1) -
                                                       rho.matrix()(1, 1)));
                worst_pair = std::max(
                    worst_pair,
                    trace_distance(DensityOperator(after_weak), after_pd));
            }
        }
        out.push_back(make_result("weak POVM off-diagonal scaling = sech x",
                                  worst_weak, 1e-12));
        out.push_back(make_result("PD off-diagonal scaling = sqrt(1-lambda)",
                                  worst_pd, 1e-12));
        out.push_back(make_result("weak POVM = PD at lambda(x), single qubit",
                                  worst_pair, 1e-12));
    }

    // Composition PD(l1) then PD(l2) = PD(1 - (1-l1)(1-l2)).
    {
        std::mt19937_64 rng(kSeed + 2);
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const DensityOperator rho = random_single_qubit_state(rng);
            for (double l1 : {0.0, 0.3, 0.8}) {
                for (double l2 : {0.1, 0.5, 0.95}) {
                    const DensityOperator two = apply_channel(
                        phase_damping_kraus(l2),
                        apply_channel(phase_damping_kraus(l1), rho, 0), 0);
                    const DensityOperator one = apply_channel(
                        phase_damping_kraus(1.0 - (1.0 - l1) * (1.0 - l2)), rho,
                        0);
                    worst = std::max(worst,
                                     max_abs_diff(two.matrix(), one.matrix()));
                }
            }
        }
        out.push_back(make_result("PD composition law", worst, 1e-12));
    }

    // Channel outputs stay physical on random two-qubit inputs.
    {
        std::mt19937_64 rng(kSeed + 3);
        double worst = 0.0;
        for (int i = 0; i < 8; ++i) {
            const DensityOperator rho = random_two_qubit_state(rng);
            for (double lambda : {0.2, 0.7, 1.0}) {
                const DensityOperator after =
                    apply_channel(phase_damping_kraus(lambda), rho, 1);
                const double herm = hermiticity_defect(after.matrix());
                const double tr = std::abs(after.matrix().trace().real() - 1.0);
                const double neg =
                    std::max(0.0, -eigh(after.matrix()).eigenvalues.minCoeff());
                worst = std::max({worst, herm, tr, neg});
            }
        }
        out.push_back(make_result("channel outputs remain physical", worst, 1e-10));
    }

    // Post-weak-measurement state equals the channel output at lambda(x) on
    // qubit B across the reference strength grid.
    {
        double worst = 0.0;
        for (const auto& rho : {werner(0.8), bell_diagonal({1, -1, 1})}) {
            for (double x : table1_x_grid()) {
                const DensityOperator via_povm =
                    measure_b_weak(rho, weak_povm(simplified_basis(), x))
                        .post_state;
                const DensityOperator via_pd = apply_channel(
                    phase_damping_kraus(lambda_from_x(x)), rho, 1);
                worst = std::max(worst, trace_distance(via_povm, via_pd));
            }
        }
        out.push_back(make_result("weak measurement = PD channel on qubit B",
                                  worst, 1e-12));
    }

    return out;
}

std::vector<CheckResult> verify_dilation(const GateFactory& gates) {
    std::vector<CheckResult> out;
    std::vector<double> lambdas;
    for (int i = 0; i <= 10; ++i) lambdas.push_back(i / 10.0);

    // All four gates unitary.
    {
        double worst = 0.0;
        for (double lambda : lambdas) {
            const DilationGates g = gates(lambda);
            for (const Matrix* m : {&g.v, &g.w, &g.u0, &g.u1}) {
                worst = std::max(
                    worst,
                    max_abs_diff(m->adjoint() * (*m), Matrix::Identity(2, 2)));
            }
        }
        out.push_back(make_result("dilation gates unitary", worst, 1e-12));
    }

    // E_k rebuilt from the gates match the Kraus pair entrywise.
    {
        double worst = 0.0;
        for (double lambda : lambdas) {
            const auto rebuilt = kraus_from_gates(gates(lambda));
            const auto direct = phase_damping_kraus(lambda).kraus_ops;
            for (size_t k = 0; k < rebuilt.size(); ++k) {
                worst = std::max(worst, max_abs_diff(rebuilt[k], direct[k]));
            }
        }
        out.push_back(
            make_result("gate decomposition rebuilds Kraus pair", worst, 1e-12));
    }

    // Circuit output equals Kraus application: 20 random states x 11 lambdas.
    {
        std::mt19937_64 rng(kSeed + 4);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const DensityOperator rho = random_two_qubit_state(rng);
            for (double lambda : lambdas) {
                const Matrix via_circuit =
                    apply_dilation_circuit(gates(lambda), rho.matrix(), 1);
                const DensityOperator via_kraus =
                    apply_channel(phase_damping_kraus(lambda), rho, 1);
                // Raw trace norm: a corrupted gate set may produce an
                // unphysical circuit output, which must register as a failed
                // check rather than an exception.
                const double dist =
                    0.5 * eigh(via_circuit - via_kraus.matrix())
                              .eigenvalues.cwiseAbs()
                              .sum();
                worst = std::max(worst, dist);
            }
        }
        out.push_back(make_result(
            "dilation circuit = Kraus channel (20 states x 11 lambdas)", worst,
            1e-12));
    }

    return out;
}

std::vector<CheckResult> verify_discord() {
    std::vector<CheckResult> out;
    const OptimizerConfig cfg;

    // The two projective routes give the same QD.
    {
        double worst = 0.0;
        for (int i = 0; i <= 10; ++i) {
            const DiscordReport r = quantum_discord(werner(i / 10.0), cfg);
            worst = std::max(worst,
                             std::abs(r.classical_corr - r.post_mutual_info));
        }
        std::mt19937_64 rng(kSeed + 5);
        for (int i = 0; i < 20; ++i) {
            const DiscordReport r =
                quantum_discord(bell_diagonal(random_physical_bd(rng)), cfg);
            worst = std::max(worst,
                             std::abs(r.classical_corr - r.post_mutual_info));
        }
        out.push_back(
            make_result("QD route equivalence (11 Werner + 20 BD)", worst, 1e-6));
    }

    // Ordering, monotonicity, limits and the (pi, pi) optimum across the
    // reference strength grid for both presets.
    {
        double worst_order = 0.0, worst_mono = 0.0, worst_basis = 0.0;
        double worst_limit0 = 0.0, worst_limit20 = 0.0;
        for (const auto& rho : {werner(0.8), bell_diagonal({1, -1, 1})}) {
            const DiscordReport qd = quantum_discord(rho, cfg);
            const double s_a = detail::entropy_bits(
                partial_trace(rho.matrix(), {2, 2}, {0}));
            double prev_sqd = 0.0, prev_wqd = 0.0;
            bool first = true;
            for (double x : table1_x_grid()) {
                const DiscordReport s = super_quantum_discord(rho, x, cfg);
                const DiscordReport w = weak_quantum_discord(rho, x, cfg);
                worst_order =
                    std::max({worst_order, *w.wqd - qd.qd, qd.qd - *s.sqd});
                if (!first) {
                    worst_mono = std::max(
                        {worst_mono, *s.sqd - prev_sqd, prev_wqd - *w.wqd});
                }
                prev_sqd = *s.sqd;
                prev_wqd = *w.wqd;
                first = false;

                const double jx_at_pi =
                    s_a - conditional_entropy_weak(
                              rho, weak_povm(simplified_basis(), x));
                worst_basis =
                    std::max(worst_basis, std::abs(s.opt_value - jx_at_pi));
            }
            worst_basis = std::max(
                worst_basis, std::abs(qd.opt_value -
                                      classical_correlation(rho, simplified_basis())));

            const DiscordReport s0 = super_quantum_discord(rho, 0.0, cfg);
            const DiscordReport w0 = weak_quantum_discord(rho, 0.0, cfg);
            worst_limit0 = std::max({worst_limit0,
                                     std::abs(*s0.sqd - s0.total_mutual_info),
                                     std::abs(*w0.wqd)});
            const DiscordReport s20 = super_quantum_discord(rho, 20.0, cfg);
            const DiscordReport w20 = weak_quantum_discord(rho, 20.0, cfg);
            worst_limit20 = std::max({worst_limit20, std::abs(*s20.sqd - qd.qd),
                                      std::abs(*w20.wqd - qd.qd)});
        }
        out.push_back(make_result("ordering WQD <= QD <= SQD (reference grid)",
                                  worst_order, 1e-6));
        out.push_back(make_result("SQD non-increasing, WQD non-decreasing",
                                  worst_mono, 1e-8));
        out.push_back(make_result("limits at x=0 (SQD=I, WQD=0)", worst_limit0,
                                  1e-9));
        out.push_back(make_result("strong limit x=20 (SQD, WQD -> QD)",
                                  worst_limit20, 1e-5));
        out.push_back(make_result("optimum equals value at (pi, pi)",
                                  worst_basis, 1e-9));
    }

    // QD invariant under local unitaries on A.
    {
        std::mt19937_64 rng(kSeed + 6);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            const DensityOperator rho = random_two_qubit_state(rng);
            const double qd0 = quantum_discord(rho, cfg).qd;
            const Matrix lifted =
                kron(random_single_qubit_unitary(rng), Matrix::Identity(2, 2));
            const DensityOperator rotated(lifted * rho.matrix() *
                                          lifted.adjoint());
            worst = std::max(worst,
                             std::abs(quantum_discord(rotated, cfg).qd - qd0));
        }
        out.push_back(
            make_result("QD invariant under A-side unitaries", worst, 1e-6));
    }

    return out;
}

std::vector<CheckResult> verify_all() {
    std::vector<CheckResult> out = verify_povm();
    for (auto&& r : verify_channel()) out.push_back(std::move(r));
    for (auto&& r : verify_dilation()) out.push_back(std::move(r));
    for (auto&& r : verify_discord()) out.push_back(std::move(r));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (max error "
            << r.max_error << ", tolerance " << r.tolerance << ")\n";
    }
}

}  // namespace qdsim
