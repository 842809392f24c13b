#include "qdsim/measure.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdsim/errors.hpp"
#include "qdsim/qmath.hpp"

namespace qdsim {

namespace {

constexpr double kZeroProb = 1e-12;

void validate_basis(const MeasurementBasis& basis) {
    if (!std::isfinite(basis.theta) || !std::isfinite(basis.phi) ||
        basis.theta < 0.0 || basis.theta > std::numbers::pi ||
        basis.phi < 0.0 || basis.phi >= 2.0 * std::numbers::pi) {
        throw DomainError("basis: theta in [0, pi], phi in [0, 2 pi) required");
    }
}

DensityOperator maximally_mixed_qubit() {
    return DensityOperator(0.5 * Matrix::Identity(2, 2));
}

// Tr_B[(I⊗P) rho (I⊗P)] without forming the 4x4 product:
//   M(a, a') = sum_{c,c'} (P^2)(c', c) rho(2a + c, 2a' + c').
Matrix conditional_block(const Matrix& rho4, const Matrix& p_squared) {
    Matrix m = Matrix::Zero(2, 2);
    for (int a = 0; a < 2; ++a) {
        for (int ap = 0; ap < 2; ++ap) {
            Complex acc = 0.0;
            for (int c = 0; c < 2; ++c) {
                for (int cp = 0; cp < 2; ++cp) {
                    acc += p_squared(cp, c) * rho4(2 * a + c, 2 * ap + cp);
                }
            }
            m(a, ap) = acc;
        }
    }
    return m;
}

MeasurementResult measure_with_ops(const DensityOperator& rho,
                                   const std::vector<Matrix>& ops) {
    if (rho.dim() != 4) {
        throw DimensionError("measure: two-qubit state required");
    }
    std::vector<MeasurementOutcome> outcomes;
    Matrix post = Matrix::Zero(4, 4);
    for (const Matrix& op : ops) {
        const Matrix lifted = kron(Matrix::Identity(2, 2), op);
        const Matrix sandwiched = lifted * rho.matrix() * lifted.adjoint();
        post += sandwiched;
        double p = sandwiched.trace().real();
        p = std::min(std::max(p, 0.0), 1.0);
        if (p < kZeroProb) {
            outcomes.push_back({p, maximally_mixed_qubit()});
        } else {
            Matrix cond = partial_trace(sandwiched, {2, 2}, {0}) / p;
            outcomes.push_back({p, DensityOperator(std::move(cond))});
        }
    }
    return MeasurementResult{std::move(outcomes), DensityOperator(std::move(post))};
}

}  // namespace

std::pair<Matrix, Matrix> projectors(const MeasurementBasis& basis) {
    const Matrix u = basis_unitary(basis);
    return {u.col(0) * u.col(0).adjoint(), u.col(1) * u.col(1).adjoint()};
}

Matrix basis_unitary(const MeasurementBasis& basis) {
    validate_basis(basis);
    const double ct = std::cos(basis.theta / 2.0);
    const double st = std::sin(basis.theta / 2.0);
    const Complex phase = std::polar(1.0, basis.phi);
    Matrix u(2, 2);
    u << ct, -st, phase * st, phase * ct;
    return u;
}

WeakPovm weak_povm(const MeasurementBasis& basis, double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw DomainError("weak_povm: strength must be finite and >= 0");
    }
    if (x > kMaxWeakStrength) {
        throw DomainError("weak_povm: strength capped at 30; use a projective "
                          "measurement for the strong limit");
    }
    auto [pi1, pi2] = projectors(basis);
    // (1 -/+ tanh x)/2 written as logistic terms; exact at large x where
    // 1 - tanh x underflows.
    const double wm = 1.0 / (1.0 + std::exp(2.0 * x));   // (1 - tanh x)/2
    const double wp = 1.0 / (1.0 + std::exp(-2.0 * x));  // (1 + tanh x)/2
    const double am = std::sqrt(wm);
    const double ap = std::sqrt(wp);
    return WeakPovm{x, am * pi1 + ap * pi2, ap * pi1 + am * pi2};
}

MeasurementResult measure_b_projective(const DensityOperator& rho,
                                       const MeasurementBasis& basis) {
    auto [pi1, pi2] = projectors(basis);
    return measure_with_ops(rho, {pi1, pi2});
}

MeasurementResult measure_b_weak(const DensityOperator& rho,
                                 const WeakPovm& povm) {
    return measure_with_ops(rho, {povm.p_plus, povm.p_minus});
}

double conditional_entropy_projective(const DensityOperator& rho,
                                      const MeasurementBasis& basis) {
    if (rho.dim() != 4) {
        throw DimensionError("conditional_entropy: two-qubit state required");
    }
    auto [pi1, pi2] = projectors(basis);
    return detail::weighted_conditional_entropy(rho.matrix(), {pi1, pi2});
}

double conditional_entropy_weak(const DensityOperator& rho,
                                const WeakPovm& povm) {
    if (rho.dim() != 4) {
        throw DimensionError("conditional_entropy: two-qubit state required");
    }
    return detail::weighted_conditional_entropy(
        rho.matrix(),
        {povm.p_plus * povm.p_plus, povm.p_minus * povm.p_minus});
}

namespace detail {

Matrix sandwich_b(const Matrix& rho4, const std::vector<Matrix>& ops) {
    Matrix out = Matrix::Zero(4, 4);
    for (const Matrix& op : ops) {
        const Matrix lifted = kron(Matrix::Identity(2, 2), op);
        out += lifted * rho4 * lifted.adjoint();
    }
    return out;
}

double weighted_conditional_entropy(const Matrix& rho4,
                                    const std::vector<Matrix>& squared_ops) {
    double total = 0.0;
    for (const Matrix& q : squared_ops) {
        Matrix block = conditional_block(rho4, q);
        const double p = block.trace().real();
        if (p < kZeroProb) continue;
        total += p * entropy_bits(block / p);
    }
    return total;
}

}  // namespace detail

}  // namespace qdsim
