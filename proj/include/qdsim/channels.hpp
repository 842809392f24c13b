#pragma once

#include <string>
#include <vector>

#include "qdsim/density_operator.hpp"
#include "qdsim/matrix.hpp"

namespace qdsim {

// Trace-preserving channel in Kraus form: sum_k E_k^dag E_k = I.
struct KrausChannel {
    std::vector<Matrix> kraus_ops;
    std::string label;
};

// Single-qubit unitaries realizing a two-Kraus channel on system plus
// ancilla: V and W act on the ancilla, U_i on the target controlled by the
// ancilla, and E_k = sum_i W_ki V_i0 U_i.
struct DilationGates {
    Matrix v;
    Matrix w;
    Matrix u0;
    Matrix u1;
};

// lambda = 1 - sech^2 x = tanh^2 x.
double lambda_from_x(double x);

// Inverse map, x = atanh(sqrt(lambda)); lambda must lie in [0, 1).
double x_from_lambda(double lambda);

// Phase damping channel of strength lambda:
//   E_0 = ((1+sqrt(1-lambda))/2) I + ((1-sqrt(1-lambda))/2) sigma_3
//   E_1 = (sqrt(lambda)/2)(I - sigma_3)
KrausChannel phase_damping_kraus(double lambda);

// sum_k (I⊗...⊗E_k⊗...⊗I) rho (...)^dag with the 2x2 Kraus ops placed on
// `target_qubit` (0-based, first tensor factor is qubit 0).
DensityOperator apply_channel(const KrausChannel& channel,
                              const DensityOperator& rho, int target_qubit);

// Gates for the ancilla dilation of the phase damping channel: U0 = I,
// U1 = sigma_3, V = W real symmetric built from sqrt((1±sqrt(1-lambda))/2).
DilationGates dilation_gates(double lambda);

// Kraus operators E_k = sum_i W_ki V_i0 U_i reconstructed from the gates.
std::vector<Matrix> kraus_from_gates(const DilationGates& gates);

// Runs the dilation circuit on an explicit gate set: ancilla |0><0| is
// prepended, V acts on the ancilla, the ancilla-controlled U_0/U_1 acts on
// the target qubit, W acts on the ancilla, and the ancilla is traced out.
Matrix apply_dilation_circuit(const DilationGates& gates, const Matrix& rho4,
                              int target_qubit);

// Phase damping on one qubit of a two-qubit state via the ancilla circuit;
// equals apply_channel(phase_damping_kraus(lambda), rho, target_qubit).
DensityOperator apply_via_dilation(double lambda, const DensityOperator& rho,
                                   int target_qubit);

// Rotation angle -2 asin(sqrt((1-sqrt(1-lambda))/2)) realizing the V gate as
// an rf pulse; kept for parity with the hardware parameterization.
double rotation_angle_from_lambda(double lambda);

}  // namespace qdsim
