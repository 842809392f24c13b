#pragma once

#include <vector>

#include "qdsim/density_operator.hpp"
#include "qdsim/matrix.hpp"

namespace qdsim {

// Eigendecomposition of a Hermitian matrix, eigenvalues in descending order,
// eigenvector columns orthonormal. Reconstruction U diag(w) U^dag matches the
// symmetrized input to 1e-10.
struct HermitianSpectrum {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;
};

// Kronecker product. Result dimension must stay within 8x8.
Matrix kron(const Matrix& a, const Matrix& b);

// Reduced matrix on the subsystems listed in `keep` (original order kept).
// `dims` are the tensor factor dimensions; their product must equal the
// matrix dimension.
Matrix partial_trace(const Matrix& m, const std::vector<Eigen::Index>& dims,
                     const std::vector<int>& keep);

// Hermitian eigendecomposition. Input is symmetrized as (M + M^dag)/2 first;
// a Hermiticity defect beyond 1e-8 is a DomainError.
HermitianSpectrum eigh(const Matrix& m);

// S(rho) = -Tr(rho log2 rho), in bits. Eigenvalues below 1e-12 contribute 0.
double von_neumann_entropy(const DensityOperator& rho);

// Uhlmann-Jozsa fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityOperator& rho_th, const DensityOperator& rho_ex);

// (1/2) sum |eigenvalues of a - b|.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

namespace detail {

// Entropy in bits of a Hermitian PSD matrix given as raw storage; dim-2
// inputs use the closed-form 2x2 eigenvalues. Eigenvalues in [-1e-8, 1e-12)
// contribute 0; below -1e-8 is a DomainError.
double entropy_bits(const Matrix& m);

// -p log2 p with the 0 log 0 := 0 convention and the clipping above.
double plogp_bits(double p);

}  // namespace detail

}  // namespace qdsim
