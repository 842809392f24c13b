#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qdsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Pauli matrix sigma_i, i = 0 (identity) .. 3.
Matrix pauli(int i);

// max |M(i,j) - conj(M(j,i))|
double hermiticity_defect(const Matrix& m);

// max entrywise |a - b|
double max_abs_diff(const Matrix& a, const Matrix& b);

bool is_unitary(const Matrix& m, double tol);

}  // namespace qdsim
