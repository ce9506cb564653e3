#pragma once

#include <array>
#include <complex>

#include "rqi/minkowski.hpp"

// Wigner rotations W(Lambda, p) = L^-1(Lambda p) Lambda L(p) and their
// spin-1/2 representation.
//
// Angle-sign bookkeeping, pinned numerically against the closed forms:
// for a particle moving along +z boosted along +x, the matrix product W is
// the rotation about -y by |theta_W| (equivalently about +y by the signed
// theta_W), where tan(theta_W) = -gamma' gamma beta' beta / (gamma' + gamma)
// is negative for positive velocities. wigner_rotation reports the canonical
// (axis, angle >= 0) pair; the closed forms below return the signed value.
// The two are related by angle_about(): the signed angle of W about +y
// equals the closed form for this configuration.

namespace rqi {

using Complex = std::complex<double>;

/// 2x2 complex matrix, unitary with determinant 1 when constructed through
/// spin_half_rep (an SU(2) element).
class SpinHalfRep {
public:
    SpinHalfRep() : m_{{{1.0, 0.0}, {0.0, 1.0}}} {}
    SpinHalfRep(Complex a, Complex b, Complex c, Complex d) : m_{{{a, b}, {c, d}}} {}

    Complex operator()(int r, int c) const { return m_[r][c]; }

    SpinHalfRep operator*(const SpinHalfRep& o) const;
    SpinHalfRep adjoint() const;
    Complex det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

    /// Largest entry of |U U^dag - I|.
    double unitarity_deviation() const;

    std::array<Complex, 2> operator*(const std::array<Complex, 2>& v) const {
        return {m_[0][0] * v[0] + m_[0][1] * v[1], m_[1][0] * v[0] + m_[1][1] * v[1]};
    }

private:
    std::array<std::array<Complex, 2>, 2> m_;
};

/// cos(theta/2) I + i sin(theta/2) (axis . sigma), with the standard Pauli
/// matrices (sigma_z diagonal, +1 on the spin-up state). For axis = -y this
/// is the real matrix ((cos, -sin), (sin, cos)) of half the angle.
SpinHalfRep spin_half_rep(const Vec3& axis, double angle);

/// A Wigner rotation: the matrix product together with its canonically
/// extracted axis-angle pair (angle in [0, pi]).
struct WignerRotation {
    LorentzMatrix matrix;
    Rotation3 rotation;

    const Vec3& axis() const { return rotation.axis; }
    double angle() const { return rotation.angle; }

    /// Signed angle about a reference axis collinear with the rotation axis:
    /// angle() * sign(ref . axis). Throws if the axes are not collinear
    /// (meaningless request) unless the rotation is trivial.
    double angle_about(const Vec3& ref) const;

    /// SU(2) element transporting spin amplitudes under this rotation,
    /// exp(-i angle sigma.axis / 2) = spin_half_rep(axis, angle).adjoint().
    /// This is the convention that reproduces the Bell-state mixing closed
    /// forms in `states` and composes as a true homomorphism (up to the
    /// SU(2) double-cover sign).
    SpinHalfRep spin_half() const;
};

/// W(Lambda, p) = L^-1(Lambda p) Lambda L(p). Validates Lambda, and checks
/// the product is a pure spatial rotation within purity_tol (looser than
/// algebraic tolerances; it stacks three matrix products).
WignerRotation wigner_rotation(const LorentzMatrix& lambda, const FourMomentum& p,
                               double purity_tol = 1e-8);

/// Signed Wigner angle for a particle moving along +z boosted along +x:
/// atan2(-gamma' gamma beta' beta, gamma' + gamma). Magnitude < pi/2.
double wigner_angle_perpendicular(double beta, double beta_prime);

/// Wigner angle of the two-boost composition B_y B_x = R_{-z}(theta_W) B.
/// Same closed form as the perpendicular case; exposed separately because
/// the two-boost derivation (symmetry of the residual boost matrix) gives an
/// independent oracle for it.
double wigner_angle_two_boosts(double beta_x, double beta_y);

}  // namespace rqi
