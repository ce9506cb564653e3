#pragma once

#include <array>

#include "rqi/states.hpp"

// Schmidt decomposition of two-qubit spin states via the closed-form
// eigendecomposition of the 2x2 Hermitian matrix C C^dag (exact to rounding,
// no general-purpose decomposition needed), von Neumann entropy in bits, and
// rank-one separability detection.

namespace rqi {

using C2 = std::array<Complex, 2>;

/// Amplitudes reshaped as C[i][j] = amplitude of |i>_1 |j>_2.
struct CoefficientMatrix {
    std::array<std::array<Complex, 2>, 2> entries{};

    Complex operator()(int i, int j) const { return entries[i][j]; }
    double frobenius_norm() const;
};

CoefficientMatrix coefficient_matrix(const BipartiteState& state);

/// coefficients are descending and satisfy sum(lambda^2) = 1; basis1/basis2
/// are orthonormal and reconstruct the state as sum_i lambda_i |i>_1 |i>_2.
/// Phase convention: each basis1 vector's largest-magnitude component is
/// made real nonnegative (ties to the lower index); basis2 absorbs the
/// residual phase. With degenerate coefficients any orthonormal choice in
/// the degenerate subspace is valid; rely on reconstruction, not on the
/// vectors themselves.
struct SchmidtDecomposition {
    std::array<double, 2> coefficients{};
    std::array<C2, 2> basis1{};
    std::array<C2, 2> basis2{};

    Amplitudes reconstruct() const;
};

SchmidtDecomposition schmidt(const BipartiteState& state);

/// -sum lambda_i^2 log2 lambda_i^2 with 0 log 0 = 0; in [0, 1] for qubits.
double von_neumann_entropy(const BipartiteState& state);

/// True iff the second Schmidt coefficient is below tol (rank one).
bool is_separable(const BipartiteState& state, double tol = kDefaultTolerance);

}  // namespace rqi
