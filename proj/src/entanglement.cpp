#include "rqi/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace rqi {

namespace {

double norm_sq(const C2& v) { return std::norm(v[0]) + std::norm(v[1]); }

C2 normalized(const C2& v) {
    const double n = std::sqrt(norm_sq(v));
    return {v[0] / n, v[1] / n};
}

/// Applies the phase convention: largest-magnitude component (ties to the
/// lower index) made real nonnegative. Returns the phase that was removed.
Complex fix_phase(C2& v) {
    const int k = (std::abs(v[1]) > std::abs(v[0])) ? 1 : 0;
    const double mag = std::abs(v[k]);
    if (mag < 1e-15) return 1.0;
    const Complex phase = v[k] / mag;
    v[0] /= phase;
    v[1] /= phase;
    return phase;
}

}  // namespace

double CoefficientMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& row : entries) {
        for (const Complex& c : row) s += std::norm(c);
    }
    return std::sqrt(s);
}

CoefficientMatrix coefficient_matrix(const BipartiteState& state) {
    const Amplitudes& a = state.amplitudes();
    CoefficientMatrix c;
    c.entries = {{{a[0], a[1]}, {a[2], a[3]}}};
    return c;
}

Amplitudes SchmidtDecomposition::reconstruct() const {
    Amplitudes a{};
    for (int k = 0; k < 2; ++k) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                a[2 * i + j] += coefficients[k] * basis1[k][i] * basis2[k][j];
            }
        }
    }
    return a;
}

SchmidtDecomposition schmidt(const BipartiteState& state) {
    const CoefficientMatrix cm = coefficient_matrix(state);
    const auto& c = cm.entries;

    // 2x2 Hermitian C C^dag = ((a, b), (conj(b), d)) with a, d real.
    const double a = std::norm(c[0][0]) + std::norm(c[0][1]);
    const double d = std::norm(c[1][0]) + std::norm(c[1][1]);
    const Complex b = c[0][0] * std::conj(c[1][0]) + c[0][1] * std::conj(c[1][1]);

    const double half_trace = (a + d) / 2.0;
    const double disc = std::sqrt(std::max(0.0, (a - d) * (a - d) / 4.0 + std::norm(b)));
    const double mu1 = half_trace + disc;  // eigenvalues, descending
    const double mu2 = std::max(0.0, half_trace - disc);

    SchmidtDecomposition s;
    s.coefficients = {std::sqrt(std::max(0.0, mu1)), std::sqrt(mu2)};

    // Eigenvector of CC^dag for mu1; pick the numerically larger expression.
    C2 u1;
    if (std::abs(b) > 1e-15) {
        u1 = (std::abs(mu1 - a) > std::abs(mu1 - d)) ? C2{b, mu1 - a} : C2{mu1 - d, std::conj(b)};
        u1 = normalized(u1);
    } else {
        u1 = (a >= d) ? C2{1.0, 0.0} : C2{0.0, 1.0};
    }
    C2 u2 = {-std::conj(u1[1]), std::conj(u1[0])};  // orthonormal complement

    fix_phase(u1);
    fix_phase(u2);
    s.basis1 = {u1, u2};

    // basis2_k = C^T conj(u_k) / lambda_k; orthonormal completion when the
    // coefficient vanishes (product state).
    for (int k = 0; k < 2; ++k) {
        const C2& u = s.basis1[k];
        C2 v = {c[0][0] * std::conj(u[0]) + c[1][0] * std::conj(u[1]),
                c[0][1] * std::conj(u[0]) + c[1][1] * std::conj(u[1])};
        if (s.coefficients[k] > 1e-12) {
            s.basis2[k] = {v[0] / s.coefficients[k], v[1] / s.coefficients[k]};
        } else {
            const C2& w = s.basis2[0];
            s.basis2[k] = {-std::conj(w[1]), std::conj(w[0])};
        }
    }
    return s;
}

double von_neumann_entropy(const BipartiteState& state) {
    const SchmidtDecomposition s = schmidt(state);
    double entropy = 0.0;
    for (double lambda : s.coefficients) {
        const double p = lambda * lambda;
        if (p > 0.0) entropy -= p * std::log2(p);
    }
    return entropy;
}

bool is_separable(const BipartiteState& state, double tol) {
    return schmidt(state).coefficients[1] < tol;
}

}  // namespace rqi
