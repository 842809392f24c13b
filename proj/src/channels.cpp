#include "qdsim/channels.hpp"

#include <cmath>
#include <string>

#include "qdsim/errors.hpp"
#include "qdsim/qmath.hpp"

namespace qdsim {

namespace {

void validate_lambda(double lambda, const char* who) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError(std::string(who) + ": lambda must lie in [0, 1]");
    }
}

// I⊗...⊗op⊗...⊗I with `op` at position `target` among `qubits` factors.
Matrix lift_to_qubit(const Matrix& op, int target, int qubits) {
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 0; q < qubits; ++q) {
        out = kron(out, q == target ? op : Matrix::Identity(2, 2));
    }
    return out;
}

}  // namespace

double lambda_from_x(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw DomainError("lambda_from_x: strength must be finite and >= 0");
    }
    const double t = std::tanh(x);
    return t * t;  // 1 - sech^2 x
}

double x_from_lambda(double lambda) {
    if (!(lambda >= 0.0) || lambda >= 1.0) {
        throw DomainError("x_from_lambda: lambda must lie in [0, 1)");
    }
    return std::atanh(std::sqrt(lambda));
}

KrausChannel phase_damping_kraus(double lambda) {
    validate_lambda(lambda, "phase_damping_kraus");
    const double s = std::sqrt(1.0 - lambda);
    const Matrix i2 = Matrix::Identity(2, 2);
    Matrix e0 = 0.5 * (1.0 + s) * i2 + 0.5 * (1.0 - s) * pauli(3);
    Matrix e1 = 0.5 * std::sqrt(lambda) * (i2 - pauli(3));
    return KrausChannel{{std::move(e0), std::move(e1)},
                        "phase-damping(lambda=" + std::to_string(lambda) + ")"};
}

DensityOperator apply_channel(const KrausChannel& channel,
                              const DensityOperator& rho, int target_qubit) {
    const int qubits = rho.qubits();
    if (target_qubit < 0 || target_qubit >= qubits) {
        throw DimensionError("apply_channel: target qubit out of range");
    }
    for (const Matrix& e : channel.kraus_ops) {
        if (e.rows() != 2 || e.cols() != 2) {
            throw DimensionError("apply_channel: Kraus operators must be 2x2");
        }
    }
    Matrix out = Matrix::Zero(rho.dim(), rho.dim());
    for (const Matrix& e : channel.kraus_ops) {
        const Matrix lifted = lift_to_qubit(e, target_qubit, qubits);
        out += lifted * rho.matrix() * lifted.adjoint();
    }
    return DensityOperator(std::move(out));
}

DilationGates dilation_gates(double lambda) {
    validate_lambda(lambda, "dilation_gates");
    const double s = std::sqrt(1.0 - lambda);
    const double alpha = std::sqrt(0.5 * (1.0 + s));
    const double beta = std::sqrt(0.5 * (1.0 - s));
    Matrix v(2, 2);
    v << alpha, beta, beta, -alpha;
    return DilationGates{v, v, Matrix::Identity(2, 2), pauli(3)};
}

std::vector<Matrix> kraus_from_gates(const DilationGates& gates) {
    std::vector<Matrix> out;
    const Matrix* u[2] = {&gates.u0, &gates.u1};
    for (int k = 0; k < 2; ++k) {
        Matrix e = Matrix::Zero(2, 2);
        for (int i = 0; i < 2; ++i) {
            e += gates.w(k, i) * gates.v(i, 0) * (*u[i]);
        }
        out.push_back(std::move(e));
    }
    return out;
}

Matrix apply_dilation_circuit(const DilationGates& gates, const Matrix& rho4,
                              int target_qubit) {
    if (rho4.rows() != 4 || rho4.cols() != 4) {
        throw DimensionError("apply_dilation_circuit: two-qubit state required");
    }
    if (target_qubit < 0 || target_qubit > 1) {
        throw DimensionError("apply_dilation_circuit: target qubit out of range");
    }
    const Matrix i4 = Matrix::Identity(4, 4);
    Matrix anc0 = Matrix::Zero(2, 2);
    anc0(0, 0) = 1.0;
    Matrix anc1 = Matrix::Zero(2, 2);
    anc1(1, 1) = 1.0;

    // Ancilla is the first factor: V and W act on it, U_i on the target
    // qubit controlled by the ancilla state.
    const Matrix controlled =
        kron(anc0, lift_to_qubit(gates.u0, target_qubit, 2)) +
        kron(anc1, lift_to_qubit(gates.u1, target_qubit, 2));
    const Matrix total = kron(gates.w, i4) * controlled * kron(gates.v, i4);

    const Matrix in = kron(anc0, rho4);
    const Matrix out = total * in * total.adjoint();
    return partial_trace(out, {2, 2, 2}, {1, 2});
}

DensityOperator apply_via_dilation(double lambda, const DensityOperator& rho,
                                   int target_qubit) {
    validate_lambda(lambda, "apply_via_dilation");
    if (rho.dim() != 4) {
        throw DimensionError("apply_via_dilation: two-qubit state required");
    }
    return DensityOperator(
        apply_dilation_circuit(dilation_gates(lambda), rho.matrix(), target_qubit));
}

double rotation_angle_from_lambda(double lambda) {
    validate_lambda(lambda, "rotation_angle_from_lambda");
    return -2.0 * std::asin(std::sqrt(0.5 * (1.0 - std::sqrt(1.0 - lambda))));
}

}  // namespace qdsim
