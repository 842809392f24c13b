#include "qdsim/states.hpp"

#include <cmath>
#include <string>

#include "qdsim/errors.hpp"
#include "qdsim/qmath.hpp"

#include <nlohmann/json.hpp>

namespace qdsim {

namespace {

constexpr double kBlochTol = 1e-12;
constexpr double kBellTol = 1e-12;

}  // namespace

DensityOperator werner(double z) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("werner: z must lie in [0, 1]");
    }
    CVector singlet = CVector::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);   // |01>
    singlet(2) = -1.0 / std::sqrt(2.0);  // |10>
    Matrix m = z * (singlet * singlet.adjoint()) +
               (1.0 - z) * 0.25 * Matrix::Identity(4, 4);
    return DensityOperator(std::move(m));
}

DensityOperator bell_diagonal(const BellDiagonalParams& p) {
    const double c[3] = {p.c1, p.c2, p.c3};
    for (double ci : c) {
        if (!(ci >= -1.0 && ci <= 1.0)) {
            throw DomainError("bell_diagonal: c_i must lie in [-1, 1]");
        }
    }
    // Bell-basis eigenvalues; all four must be nonnegative.
    const double ev[4] = {
        (1.0 - p.c1 - p.c2 - p.c3) / 4.0,
        (1.0 - p.c1 + p.c2 + p.c3) / 4.0,
        (1.0 + p.c1 - p.c2 + p.c3) / 4.0,
        (1.0 + p.c1 + p.c2 - p.c3) / 4.0,
    };
    for (double e : ev) {
        if (e < -kBellTol) {
            throw DomainError("bell_diagonal: unphysical c vector (eigenvalue " +
                              std::to_string(e) + ")");
        }
    }
    Matrix m = 0.25 * Matrix::Identity(4, 4);
    for (int i = 0; i < 3; ++i) {
        m += 0.25 * c[i] * kron(pauli(i + 1), pauli(i + 1));
    }
    return DensityOperator(std::move(m));
}

DensityOperator bloch_state(const BlochVector& v) {
    const double norm2 = v.rx * v.rx + v.ry * v.ry + v.rz * v.rz;
    if (norm2 > 1.0 + kBlochTol) {
        throw DomainError("bloch_state: |r| exceeds 1");
    }
    Matrix m = 0.5 * (Matrix::Identity(2, 2) + v.rx * pauli(1) +
                      v.ry * pauli(2) + v.rz * pauli(3));
    return DensityOperator(std::move(m));
}

DensityOperator pseudopure_3q(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw DomainError("pseudopure_3q: epsilon must lie in [0, 1]");
    }
    Matrix m = (1.0 - epsilon) / 8.0 * Matrix::Identity(8, 8);
    m(0, 0) += epsilon;
    return DensityOperator(std::move(m));
}

std::array<double, 15> pauli_expectations(const DensityOperator& rho) {
    if (rho.dim() != 4) {
        throw DimensionError("pauli_expectations: two-qubit state required");
    }
    std::array<double, 15> out{};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == 0 && j == 0) continue;
            out[k++] = (rho.matrix() * kron(pauli(i), pauli(j))).trace().real();
        }
    }
    return out;
}

DensityOperator from_pauli_expectations(const std::array<double, 15>& values) {
    Matrix m = 0.25 * Matrix::Identity(4, 4);
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == 0 && j == 0) continue;
            m += 0.25 * values[k++] * kron(pauli(i), pauli(j));
        }
    }
    try {
        return DensityOperator(std::move(m));
    } catch (const DomainError&) {
        throw DomainError("from_pauli_expectations: reconstruction unphysical");
    }
}

nlohmann::json state_to_json(const DensityOperator& rho) {
    const auto n = rho.dim();
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < n; ++r) {
        nlohmann::json rrow = nlohmann::json::array();
        nlohmann::json irow = nlohmann::json::array();
        for (Eigen::Index c = 0; c < n; ++c) {
            rrow.push_back(rho.matrix()(r, c).real());
            irow.push_back(rho.matrix()(r, c).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return nlohmann::json{{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityOperator state_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("re") ||
        !doc.contains("im")) {
        throw DomainError("state_from_json: expected {dim, re, im}");
    }
    try {
        const auto n = doc.at("dim").get<Eigen::Index>();
        if (n != 2 && n != 4 && n != 8) {
            throw DomainError("state_from_json: dim must be 2, 4 or 8");
        }
        const auto& re = doc.at("re");
        const auto& im = doc.at("im");
        if (!re.is_array() || !im.is_array() ||
            re.size() != static_cast<size_t>(n) ||
            im.size() != static_cast<size_t>(n)) {
            throw DomainError("state_from_json: re/im must be dim x dim arrays");
        }
        Matrix m(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            const auto& rrow = re.at(r);
            const auto& irow = im.at(r);
            if (rrow.size() != static_cast<size_t>(n) ||
                irow.size() != static_cast<size_t>(n)) {
                throw DomainError("state_from_json: re/im must be dim x dim arrays");
            }
            for (Eigen::Index c = 0; c < n; ++c) {
                m(r, c) = Complex(rrow.at(c).get<double>(), irow.at(c).get<double>());
            }
        }
        return DensityOperator(std::move(m));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("state_from_json: ") + e.what());
    }
}

}  // namespace qdsim
