#include "qdsim/qmath.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qdsim/errors.hpp"

namespace qdsim {

namespace {

constexpr double kEighHermTol = 1e-8;
constexpr double kEntropyCutoff = 1e-12;
constexpr double kNegativeEigTol = 1e-8;

bool allowed_dim(Eigen::Index n) { return n == 1 || n == 2 || n == 4 || n == 8; }

// Clip roundoff-negative eigenvalues to 0; reject genuinely negative ones.
double clip_eigenvalue(double w, const char* who) {
    if (w < -kNegativeEigTol) {
        throw DomainError(std::string(who) + ": negative eigenvalue " +
                          std::to_string(w));
    }
    return std::max(w, 0.0);
}

Matrix matrix_sqrt_psd(const Matrix& m, const char* who) {
    const HermitianSpectrum s = eigh(m);
    Eigen::VectorXd roots(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
        roots[i] = std::sqrt(clip_eigenvalue(s.eigenvalues[i], who));
    }
    return s.eigenvectors * roots.asDiagonal() * s.eigenvectors.adjoint();
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
    const auto rows = a.rows() * b.rows();
    const auto cols = a.cols() * b.cols();
    if (rows > 8 || cols > 8) {
        throw DimensionError("kron: result exceeds 8x8");
    }
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<Eigen::Index>& dims,
                     const std::vector<int>& keep) {
    const int n = static_cast<int>(dims.size());
    Eigen::Index total = 1;
    for (auto d : dims) total *= d;
    if (m.rows() != total || m.cols() != total) {
        throw DimensionError("partial_trace: subsystem dims do not match matrix");
    }
    if (keep.empty()) {
        throw DimensionError("partial_trace: keep set must be nonempty");
    }
    std::vector<bool> kept(n, false);
    Eigen::Index out_dim = 1;
    for (int k : keep) {
        if (k < 0 || k >= n || kept[k]) {
            throw DimensionError("partial_trace: bad keep index");
        }
        kept[k] = true;
        out_dim *= dims[k];
    }

    // digit decomposition of a composite index, most significant factor first
    auto digits = [&](Eigen::Index idx, std::vector<Eigen::Index>& out) {
        for (int s = n - 1; s >= 0; --s) {
            out[s] = idx % dims[s];
            idx /= dims[s];
        }
    };
    auto kept_index = [&](const std::vector<Eigen::Index>& dg) {
        Eigen::Index idx = 0;
        for (int s = 0; s < n; ++s) {
            if (kept[s]) idx = idx * dims[s] + dg[s];
        }
        return idx;
    };

    Matrix out = Matrix::Zero(out_dim, out_dim);
    std::vector<Eigen::Index> dr(n), dc(n);
    for (Eigen::Index r = 0; r < total; ++r) {
        digits(r, dr);
        for (Eigen::Index c = 0; c < total; ++c) {
            digits(c, dc);
            bool traced_match = true;
            for (int s = 0; s < n && traced_match; ++s) {
                if (!kept[s] && dr[s] != dc[s]) traced_match = false;
            }
            if (traced_match) {
                out(kept_index(dr), kept_index(dc)) += m(r, c);
            }
        }
    }
    return out;
}

HermitianSpectrum eigh(const Matrix& m) {
    if (m.rows() != m.cols() || !allowed_dim(m.rows())) {
        throw DimensionError("eigh: matrix must be square with dim 1, 2, 4 or 8");
    }
    if (!m.allFinite()) {
        throw DomainError("eigh: entries must be finite");
    }
    const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (defect > kEighHermTol) {
        throw DomainError("eigh: Hermiticity defect " + std::to_string(defect));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw DomainError("eigh: eigensolver failed");
    }
    // Eigen sorts ascending; flip to descending.
    HermitianSpectrum out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

double von_neumann_entropy(const DensityOperator& rho) {
    return detail::entropy_bits(rho.matrix());
}

double fidelity(const DensityOperator& rho_th, const DensityOperator& rho_ex) {
    if (rho_th.dim() != rho_ex.dim()) {
        throw DimensionError("fidelity: dimension mismatch");
    }
    const Matrix root = matrix_sqrt_psd(rho_th.matrix(), "fidelity");
    const Matrix inner = root * rho_ex.matrix() * root;
    const HermitianSpectrum s = eigh(inner);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        sum += std::sqrt(clip_eigenvalue(s.eigenvalues[i], "fidelity"));
    }
    return std::min(sum * sum, 1.0);
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("trace_distance: dimension mismatch");
    }
    const HermitianSpectrum s = eigh(a.matrix() - b.matrix());
    return 0.5 * s.eigenvalues.cwiseAbs().sum();
}

namespace detail {

double plogp_bits(double p) {
    if (p < -kNegativeEigTol) {
        throw DomainError("entropy: negative eigenvalue " + std::to_string(p));
    }
    if (p < kEntropyCutoff) return 0.0;
    return -p * std::log2(p);
}

double entropy_bits(const Matrix& m) {
    double s = 0.0;
    if (m.rows() == 2) {
        const double mid = 0.5 * (m(0, 0).real() + m(1, 1).real());
        const double rad =
            std::hypot(0.5 * (m(0, 0).real() - m(1, 1).real()), std::abs(m(0, 1)));
        s = plogp_bits(mid + rad) + plogp_bits(mid - rad);
    } else {
        const HermitianSpectrum spec = eigh(m);
        for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
            s += plogp_bits(spec.eigenvalues[i]);
        }
    }
    return std::max(s, 0.0);
}

}  // namespace detail

}  // namespace qdsim
