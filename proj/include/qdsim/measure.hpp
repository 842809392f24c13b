#pragma once

#include <utility>
#include <vector>

#include "qdsim/density_operator.hpp"
#include "qdsim/matrix.hpp"

namespace qdsim {

// Bloch direction (theta, phi) selecting the orthogonal projector pair
//   |psi_1> =  cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
//   |psi_2> = -sin(theta/2)|0> + e^{i phi} cos(theta/2)|1>
// theta in [0, pi], phi in [0, 2 pi).
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;
};

// Two-outcome weak POVM
//   P(+x) = sqrt((1 - tanh x)/2) Pi_1 + sqrt((1 + tanh x)/2) Pi_2
//   P(-x) = sqrt((1 + tanh x)/2) Pi_1 + sqrt((1 - tanh x)/2) Pi_2
// so that x = 0 is no measurement and x -> inf recovers (Pi_2, Pi_1).
struct WeakPovm {
    double x = 0.0;
    Matrix p_plus;
    Matrix p_minus;
};

struct MeasurementOutcome {
    double probability = 0.0;
    DensityOperator conditional_state;
};

struct MeasurementResult {
    std::vector<MeasurementOutcome> outcomes;
    DensityOperator post_state;
};

// Strengths above this saturate tanh at double precision; larger x is
// rejected so a degenerate POVM cannot be requested silently.
inline constexpr double kMaxWeakStrength = 30.0;

// Projector pair of the basis; rank one, idempotent, summing to I.
std::pair<Matrix, Matrix> projectors(const MeasurementBasis& basis);

// Unitary with columns |psi_1>, |psi_2>; maps the computational basis onto
// the measurement basis.
Matrix basis_unitary(const MeasurementBasis& basis);

WeakPovm weak_povm(const MeasurementBasis& basis, double x);

// Projective measurement of subsystem B (second factor) of a two-qubit
// state. Outcome j carries p_j and the conditional state of A; post_state is
// sum_j (I⊗Pi_j) rho (I⊗Pi_j). Zero-probability outcomes carry I/2.
MeasurementResult measure_b_projective(const DensityOperator& rho,
                                       const MeasurementBasis& basis);

// Weak analogue: outcomes for P(+x), P(-x) and
// post_state = sum_± (I⊗P(±x)) rho (I⊗P(±x)).
MeasurementResult measure_b_weak(const DensityOperator& rho,
                                 const WeakPovm& povm);

// sum_j p_j S(rho_{A|Pi_j}), in bits.
double conditional_entropy_projective(const DensityOperator& rho,
                                      const MeasurementBasis& basis);

// p(x) S(rho_{A|P(x)}) + p(-x) S(rho_{A|P(-x)}), in bits.
double conditional_entropy_weak(const DensityOperator& rho,
                                const WeakPovm& povm);

namespace detail {

// Raw post-measurement matrix sum_k (I⊗K_k) rho (I⊗K_k^dag) for 2x2 kraus
// ops acting on B of a 4x4 state.
Matrix sandwich_b(const Matrix& rho4, const std::vector<Matrix>& ops);

// sum_j p_j S(rho_{A|j}) given the squared measurement operators (P^2 for a
// POVM element, Pi itself for a projector); operates on raw storage.
double weighted_conditional_entropy(const Matrix& rho4,
                                    const std::vector<Matrix>& squared_ops);

}  // namespace detail

}  // namespace qdsim
