#include "qdsim/density_operator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "qdsim/errors.hpp"

namespace qdsim {

namespace {

double min_eigenvalue(const Matrix& m) {
    if (m.rows() == 2) {
        const double a = m(0, 0).real();
        const double c = m(1, 1).real();
        const double mid = 0.5 * (a + c);
        const double rad = std::hypot(0.5 * (a - c), std::abs(m(0, 1)));
        return mid - rad;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()),
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace

DensityOperator::DensityOperator(Matrix m) : mat_(std::move(m)) {
    const auto n = mat_.rows();
    if (mat_.cols() != n || (n != 2 && n != 4 && n != 8)) {
        throw DimensionError("DensityOperator: dimension must be 2, 4 or 8");
    }
    if (!mat_.allFinite()) {
        throw DomainError("DensityOperator: entries must be finite");
    }
    const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol) {
        throw DomainError("DensityOperator: not Hermitian (defect " +
                          std::to_string(herm) + ")");
    }
    const Complex tr = mat_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
        throw DomainError("DensityOperator: trace must be 1");
    }
    const double lo = min_eigenvalue(mat_);
    if (lo < -kEigTol) {
        throw DomainError("DensityOperator: negative eigenvalue " +
                          std::to_string(lo));
    }
}

int DensityOperator::qubits() const {
    switch (mat_.rows()) {
        case 2: return 1;
        case 4: return 2;
        default: return 3;
    }
}

}  // namespace qdsim
