#pragma once

#include <Eigen/Dense>

#include "qdsim/matrix.hpp"

namespace qdsim {

// Positive semidefinite, unit-trace Hermitian matrix on 1-3 qubits.
// Construction validates:
//   - dim in {2, 4, 8}, all entries finite
//   - Hermitian within 1e-10
//   - trace 1 within 1e-10
//   - minimum eigenvalue >= -1e-10
class DensityOperator {
public:
    static constexpr double kHermTol = 1e-10;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kEigTol = 1e-10;

    explicit DensityOperator(Matrix m);

    Eigen::Index dim() const { return mat_.rows(); }
    int qubits() const;
    const Matrix& matrix() const { return mat_; }

private:
    Matrix mat_;
};

}  // namespace qdsim
