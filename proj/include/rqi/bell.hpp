#pragma once

#include <array>

#include "rqi/states.hpp"

// Quantum correlation functions and Bell/CHSH machinery. Direct 4x4
// expectation values are the single source of truth here; every closed form
// is validated against them in the tests rather than trusted.

namespace rqi {

/// Unit measurement axis.
struct Direction {
    Vec3 n;

    Direction(const Vec3& v) : n(normalized(v)) {}
    Direction(double x, double y, double z) : n(normalized(Vec3{x, y, z})) {}
};

/// T[i][j] = <sigma_i (x) sigma_j>.
struct CorrelationTensor {
    std::array<std::array<double, 3>, 3> t{};

    double operator()(int i, int j) const { return t[i][j]; }
};

struct ChshDirections {
    Direction a;
    Direction a_prime;
    Direction b;
    Direction b_prime;
};

/// The x-z plane quadruple that maximally violates CHSH on the singlet:
/// a = z, b = (x+z)/sqrt2, a' = x, b' = (x-z)/sqrt2.
ChshDirections singlet_max_directions();

/// The x-y plane quadruple used for the velocity sweeps: chosen for maximum
/// violation on the singlet in the non-relativistic limit,
/// a = (1,-1,0)/sqrt2, a' = (-1,-1,0)/sqrt2, b = y, b' = x.
ChshDirections sweep_directions();

/// <psi| (a.sigma) (x) (b.sigma) |psi>. The value of a Hermitian observable;
/// an imaginary part above 1e-10 raises an internal-consistency error.
double correlation(const BipartiteState& state, const Direction& a, const Direction& b);

/// Nine coordinate-axis evaluations of `correlation`; bilinearity gives
/// correlation(s, a, b) = a^T T b.
CorrelationTensor correlation_tensor(const BipartiteState& state);

/// Closed-form correlation of the boosted Phi+ branch state
/// cos(theta_w) Phi+ - sin(theta_w) Psi-:
///   a^T (cos^2 B - sin^2 I - sin cos X) b,  B = diag(1,-1,1),
/// with the cross matrix X built once from the Bell-basis matrix elements
/// <Phi+| sigma_i (x) sigma_j |Psi-> + h.c. (nonzero only at (z,x)/(x,z)).
double correlation_closed_form(double theta_w, const Direction& a, const Direction& b);

/// |C(a,b) + C(a',b) + C(a',b') - C(a,b')|.
double chsh(const BipartiteState& state, const ChshDirections& d);

/// sqrt(2) (1 + cos 2 theta_w): the CHSH value of the boosted singlet at the
/// sweep_directions quadruple.
double chsh_closed_form(double theta_w);

/// The same value in terms of the particle and frame velocities:
/// 2 sqrt(2) (u + u')^2 / ((u + u')^2 + (beta beta')^2), u = sqrt(1 - beta^2).
double chsh_velocity_form(double beta, double beta_prime);

/// 1 + C(b,c) - |C(a,b) - C(a,c)|; negative certifies violation of the
/// original Bell inequality. Correlations must lie in [-1, 1].
double bell_original_margin(double c_ab, double c_ac, double c_bc);

struct OptimalChsh {
    ChshDirections directions;
    double value;
};

/// Best CHSH over all direction quadruples, from the two largest singular
/// values of the correlation tensor: value = 2 sqrt(s1^2 + s2^2), with the
/// standard optimizing quadruple (a, a' the top left singular directions,
/// b, b' the matched combinations of the right ones).
OptimalChsh optimal_chsh(const BipartiteState& state);

struct TsirelsonCheck {
    double value;  // CHSH combination
    double bound;  // sqrt(4 - <[Q,R] (x) [S,T]>)
};

/// State-dependent quantum bound computed from the explicit commutator
/// observable; value <= bound <= 2 sqrt(2) always.
TsirelsonCheck tsirelson_check(const BipartiteState& state, const ChshDirections& d);

}  // namespace rqi
