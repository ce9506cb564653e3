#include "rqi/bell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rqi {

namespace {

using CMat2 = std::array<std::array<Complex, 2>, 2>;
using CMat4 = std::array<std::array<Complex, 4>, 4>;

const Complex kI(0.0, 1.0);

CMat2 pauli_dot(const Vec3& n) {
    // n.sigma in the basis with sigma_z = diag(1,-1) on {up, down}.
    return {{{Complex(n.z), Complex(n.x, -n.y)}, {Complex(n.x, n.y), Complex(-n.z)}}};
}

CMat2 mul2(const CMat2& a, const CMat2& b) {
    CMat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
        }
    }
    return r;
}

CMat2 sub2(const CMat2& a, const CMat2& b) {
    CMat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] - b[i][j];
    }
    return r;
}

CMat4 kron(const CMat2& a, const CMat2& b) {
    CMat4 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
            }
        }
    }
    return r;
}

Complex expectation(const Amplitudes& psi, const CMat4& m) {
    Complex s = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) s += std::conj(psi[i]) * m[i][j] * psi[j];
    }
    return s;
}

double real_expectation(const Amplitudes& psi, const CMat4& m, const char* what) {
    const Complex v = expectation(psi, m);
    if (std::abs(v.imag()) > 1e-10) {
        throw std::logic_error(std::string(what) +
                               ": expectation of Hermitian observable has imaginary part " +
                               std::to_string(v.imag()));
    }
    return v.real();
}

Vec3 axis_vec(int i) { return i == 0 ? unit_x() : (i == 1 ? unit_y() : unit_z()); }

/// Cross matrix X_ij = <Phi+|sigma_i (x) sigma_j|Psi-> + <Psi-|sigma_i (x) sigma_j|Phi+>,
/// evaluated once from the fixed Bell basis.
const std::array<std::array<double, 3>, 3>& cross_matrix() {
    static const std::array<std::array<double, 3>, 3> x = [] {
        constexpr double inv_sqrt2 = 0.70710678118654752440;
        const Amplitudes phi_plus = {inv_sqrt2, 0.0, 0.0, inv_sqrt2};
        const Amplitudes psi_minus = {0.0, inv_sqrt2, -inv_sqrt2, 0.0};
        std::array<std::array<double, 3>, 3> r{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const CMat4 m = kron(pauli_dot(axis_vec(i)), pauli_dot(axis_vec(j)));
                Complex fwd = 0.0;
                for (int r1 = 0; r1 < 4; ++r1) {
                    for (int c = 0; c < 4; ++c) {
                        fwd += std::conj(phi_plus[r1]) * m[r1][c] * psi_minus[c];
                    }
                }
                r[i][j] = 2.0 * fwd.real();  // h.c. doubles the real part
            }
        }
        return r;
    }();
    return x;
}

}  // namespace

ChshDirections singlet_max_directions() {
    return {Direction(0, 0, 1), Direction(1, 0, 0), Direction(1, 0, 1), Direction(1, 0, -1)};
}

ChshDirections sweep_directions() {
    return {Direction(1, -1, 0), Direction(-1, -1, 0), Direction(0, 1, 0), Direction(1, 0, 0)};
}

double correlation(const BipartiteState& state, const Direction& a, const Direction& b) {
    const CMat4 m = kron(pauli_dot(a.n), pauli_dot(b.n));
    return real_expectation(state.amplitudes(), m, "correlation");
}

CorrelationTensor correlation_tensor(const BipartiteState& state) {
    CorrelationTensor t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t.t[i][j] = correlation(state, Direction(axis_vec(i)), Direction(axis_vec(j)));
        }
    }
    return t;
}

double correlation_closed_form(double theta_w, const Direction& a, const Direction& b) {
    const double c2 = std::cos(theta_w) * std::cos(theta_w);
    const double s2 = std::sin(theta_w) * std::sin(theta_w);
    const double sc = std::sin(theta_w) * std::cos(theta_w);
    const double bdiag[3] = {1.0, -1.0, 1.0};
    const auto& x = cross_matrix();
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double tij = c2 * (i == j ? bdiag[i] : 0.0) - s2 * (i == j ? 1.0 : 0.0) -
                               sc * x[i][j];
            r += a.n[i] * tij * b.n[j];
        }
    }
    return r;
}

double chsh(const BipartiteState& state, const ChshDirections& d) {
    return std::abs(correlation(state, d.a, d.b) + correlation(state, d.a_prime, d.b) +
                    correlation(state, d.a_prime, d.b_prime) - correlation(state, d.a, d.b_prime));
}

double chsh_closed_form(double theta_w) {
    return std::sqrt(2.0) * (1.0 + std::cos(2.0 * theta_w));
}

double chsh_velocity_form(double beta, double beta_prime) {
    if (!(beta >= 0.0) || !(beta_prime >= 0.0) || beta > kMaxBeta || beta_prime > kMaxBeta) {
        throw SuperluminalError("chsh_velocity_form: velocities must lie in [0, 1)");
    }
    const double u = std::sqrt(1.0 - beta * beta);
    const double up = std::sqrt(1.0 - beta_prime * beta_prime);
    const double sum2 = (u + up) * (u + up);
    const double bb = beta * beta_prime;
    return 2.0 * std::sqrt(2.0) * sum2 / (sum2 + bb * bb);
}

double bell_original_margin(double c_ab, double c_ac, double c_bc) {
    constexpr double slack = 1e-9;
    for (double c : {c_ab, c_ac, c_bc}) {
        if (!(std::abs(c) <= 1.0 + slack)) {
            throw std::invalid_argument("bell_original_margin: correlations must lie in [-1, 1]");
        }
    }
    return 1.0 + c_bc - std::abs(c_ab - c_ac);
}

OptimalChsh optimal_chsh(const BipartiteState& state) {
    const CorrelationTensor t = correlation_tensor(state);

    // Symmetric 3x3 M = T^T T, diagonalized by Jacobi sweeps; columns of V
    // become the right singular directions of T.
    double m[3][3];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m[i][j] = 0.0;
            for (int k = 0; k < 3; ++k) m[i][j] += t(k, i) * t(k, j);
        }
    }
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) off += m[p][q] * m[p][q];
        }
        if (off < 1e-30) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(m[p][q]) < 1e-300) continue;
                const double theta = 0.5 * (m[q][q] - m[p][p]) / m[p][q];
                double tt = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) tt = -tt;
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = tt * c;
                for (int r = 0; r < 3; ++r) {
                    const double mrp = m[r][p], mrq = m[r][q];
                    m[r][p] = c * mrp - s * mrq;
                    m[r][q] = s * mrp + c * mrq;
                }
                for (int r = 0; r < 3; ++r) {
                    const double mpr = m[p][r], mqr = m[q][r];
                    m[p][r] = c * mpr - s * mqr;
                    m[q][r] = s * mpr + c * mqr;
                }
                for (int r = 0; r < 3; ++r) {
                    const double vrp = v[r][p], vrq = v[r][q];
                    v[r][p] = c * vrp - s * vrq;
                    v[r][q] = s * vrp + c * vrq;
                }
            }
        }
    }

    int order[3] = {0, 1, 2};
    std::sort(order, order + 3, [&](int a, int b) { return m[a][a] > m[b][b]; });
    const double s1 = std::sqrt(std::max(0.0, m[order[0]][order[0]]));
    const double s2 = std::sqrt(std::max(0.0, m[order[1]][order[1]]));
    const Vec3 c1 = {v[0][order[0]], v[1][order[0]], v[2][order[0]]};
    const Vec3 c2 = {v[0][order[1]], v[1][order[1]], v[2][order[1]]};

    auto apply_t = [&](const Vec3& x) {
        Vec3 r{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) r[i] += t(i, j) * x[j];
        }
        return r;
    };

    // Left singular directions; for a pure two-qubit state s1 >= 1/sqrt(3).
    const Vec3 a = normalized(apply_t(c1));
    Vec3 a_prime;
    if (s2 > 1e-12) {
        a_prime = normalized(apply_t(c2));
    } else {
        // Any unit vector orthogonal to a works; its contributions vanish.
        Vec3 seed = std::abs(a.x) < 0.9 ? unit_x() : unit_y();
        a_prime = normalized(seed - a * dot(a, seed));
    }

    const double n = std::hypot(s1, s2);
    const Vec3 b = (c1 * s1 + c2 * s2) / n;
    const Vec3 b_prime = (c2 * s2 - c1 * s1) / n;

    return OptimalChsh{
        ChshDirections{Direction(a), Direction(a_prime), Direction(b), Direction(b_prime)},
        2.0 * n};
}

TsirelsonCheck tsirelson_check(const BipartiteState& state, const ChshDirections& d) {
    // The squared CHSH operator is 4I - [Q,R] (x) [S,T] for the pairing
    // (Q+R)S + (Q-R)T. The combination evaluated by chsh() pairs the primed
    // Alice direction with both Bob terms, (Q+R)S + (R-Q)T, so Q and R enter
    // the commutator swapped: Q = a'.sigma, R = a.sigma.
    const CMat2 q = pauli_dot(d.a_prime.n);
    const CMat2 r = pauli_dot(d.a.n);
    const CMat2 s = pauli_dot(d.b.n);
    const CMat2 t = pauli_dot(d.b_prime.n);
    const CMat4 comm = kron(sub2(mul2(q, r), mul2(r, q)), sub2(mul2(s, t), mul2(t, s)));
    const double c = real_expectation(state.amplitudes(), comm, "tsirelson_check");
    return TsirelsonCheck{chsh(state, d), std::sqrt(std::max(0.0, 4.0 - c))};
}

}  // namespace rqi
