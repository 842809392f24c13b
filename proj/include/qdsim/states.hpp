#pragma once

#include <array>
#include <string>

#include "qdsim/density_operator.hpp"
#include "qdsim/matrix.hpp"

#include <nlohmann/json_fwd.hpp>

namespace qdsim {

struct BlochVector {
    double rx = 0.0;
    double ry = 0.0;
    double rz = 0.0;
};

// Correlation triple of a Bell-diagonal state. Physicality (all four Bell
// eigenvalues nonnegative) is checked at construction time of the state,
// not here: |c_i| <= 1 alone does not guarantee positivity.
struct BellDiagonalParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

// z |psi-><psi-| + (1-z) I/4 with |psi-> = (|01> - |10>)/sqrt(2).
DensityOperator werner(double z);

// (I ⊗ I + sum_i c_i sigma_i ⊗ sigma_i)/4.
DensityOperator bell_diagonal(const BellDiagonalParams& p);

// (I + rx sigma_1 + ry sigma_2 + rz sigma_3)/2.
DensityOperator bloch_state(const BlochVector& v);

// (1-eps) I/8 + eps |000><000|.
DensityOperator pseudopure_3q(double epsilon);

// Tr(rho (sigma_i ⊗ sigma_j)) for (i,j) != (0,0), row-major in (i,j).
std::array<double, 15> pauli_expectations(const DensityOperator& rho);

// Inverse of pauli_expectations; DomainError if the reconstruction is not a
// valid density operator.
DensityOperator from_pauli_expectations(const std::array<double, 15>& values);

// JSON document {"dim": n, "re": [[...]], "im": [[...]]}, row-major parts.
nlohmann::json state_to_json(const DensityOperator& rho);
DensityOperator state_from_json(const nlohmann::json& doc);

}  // namespace qdsim
