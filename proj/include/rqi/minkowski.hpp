#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "rqi/vec3.hpp"

// Four-vector and Lorentz-matrix algebra in natural units (c = 1), metric
// signature (-,+,+,+). All dot products route through the single metric
// constant below so the signature cannot drift between modules.
//
// Boost sign convention: boost_along(axis, beta) is the transformation to a
// frame moving with velocity +beta along axis, i.e. the (0,i) entries are
// -gamma*beta*axis_i. Other texts use the opposite sign; this choice makes
// the Wigner angle of the perpendicular configuration come out negative for
// positive velocities, matching the closed form in little_group.

namespace rqi {

/// Velocities at or above this magnitude are rejected as superluminal.
inline constexpr double kMaxBeta = 1.0 - 1e-12;

/// Default absolute tolerance for matrix validation checks.
inline constexpr double kDefaultTolerance = 1e-10;

struct SuperluminalError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotARotationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotALorentzMatrixError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Mat4 = std::array<std::array<double, 4>, 4>;

/// Contravariant four-vector (t, x, y, z).
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 spatial() const { return {x, y, z}; }

    FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
};

/// Minkowski inner product, eta = diag(-1,+1,+1,+1).
double minkowski_dot(const FourVector& u, const FourVector& v);

/// On-shell four-momentum of a massive particle: stores the invariant mass
/// and spatial momentum; the energy is sqrt(m^2 + |p|^2) by construction.
class FourMomentum {
public:
    FourMomentum(double mass, const Vec3& momentum);

    /// Momentum of a particle moving with speed beta along the given axis.
    static FourMomentum from_beta(double mass, double beta, const Vec3& axis);

    double mass() const { return mass_; }
    const Vec3& momentum() const { return p_; }
    double energy() const;
    double gamma() const { return energy() / mass_; }
    double beta() const { return norm(p_) / energy(); }

    FourVector four_vector() const;

private:
    double mass_;
    Vec3 p_;
};

class LorentzMatrix;

/// Report produced by validate_lorentz. The individual deviations are
/// always filled in; passed() applies the tolerance to all of them.
struct LorentzValidation {
    double max_metric_deviation = 0.0;  // max entry of |M^T eta M - eta|
    double det_deviation = 0.0;         // |det M - 1|
    bool orthochronous = false;         // M(0,0) >= 1 - tol

    bool passed(double tol) const {
        return max_metric_deviation <= tol && det_deviation <= tol && orthochronous;
    }
};

LorentzValidation validate_lorentz(const Mat4& entries, double tol = kDefaultTolerance);

/// Proper orthochronous Lorentz transformation as a 4x4 real matrix.
/// Factories construct exact group elements; from_entries validates.
class LorentzMatrix {
public:
    LorentzMatrix() : m_{} {
        for (int i = 0; i < 4; ++i) m_[i][i] = 1.0;
    }

    static LorentzMatrix identity() { return LorentzMatrix{}; }

    /// Validates the entries against the group conditions before wrapping.
    static LorentzMatrix from_entries(const Mat4& entries, double tol = kDefaultTolerance);

    double operator()(int row, int col) const { return m_[row][col]; }
    const Mat4& entries() const { return m_; }

    LorentzMatrix operator*(const LorentzMatrix& o) const;
    FourVector operator*(const FourVector& v) const;
    FourMomentum operator*(const FourMomentum& p) const;

    /// Group inverse, eta * M^T * eta (exact, no numerical inversion).
    LorentzMatrix inverse() const;

    LorentzValidation validate(double tol = kDefaultTolerance) const {
        return validate_lorentz(m_, tol);
    }

private:
    friend LorentzMatrix standard_boost(const FourMomentum&);
    friend LorentzMatrix inverse_standard_boost(const FourMomentum&);
    friend LorentzMatrix boost_along(const Vec3&, double);
    friend LorentzMatrix rotation_about(const Vec3&, double);
    explicit LorentzMatrix(const Mat4& m) : m_(m) {}

    Mat4 m_;
};

/// Standard boost L(p): the pure boost taking the rest momentum (m,0,0,0)
/// to (E, p). Components L^0_0 = gamma, L^i_0 = L^0_i = p_i/m,
/// L^i_j = delta_ij + p_i p_j / (m(m+E)); reduces to the identity at p = 0.
LorentzMatrix standard_boost(const FourMomentum& p);

/// L^{-1}(p): same spatial block, spatial-time entries negated.
LorentzMatrix inverse_standard_boost(const FourMomentum& p);

/// Pure boost to a frame moving with velocity beta along axis (see the
/// sign-convention note at the top of this header). |beta| < 1 required.
LorentzMatrix boost_along(const Vec3& axis, double beta);

/// Active right-handed spatial rotation embedded in 4x4 (time row/column
/// untouched). rotation_about(z, pi/2) maps x to y.
LorentzMatrix rotation_about(const Vec3& axis, double angle);

/// Axis-angle pair with |axis| = 1 and angle in (-pi, pi].
struct Rotation3 {
    Vec3 axis;
    double angle = 0.0;

    Rotation3(const Vec3& ax, double ang);
};

/// Extracts axis and angle from a pure spatial rotation. The returned angle
/// lies in [0, pi]; small angles use the antisymmetric part via atan2, and
/// near pi the axis comes from the symmetric part with its largest-magnitude
/// component made positive. Identity returns (z-axis, 0) by convention.
/// Throws NotARotationError naming the violated check otherwise.
Rotation3 axis_angle_from_rotation(const LorentzMatrix& M, double tol = 1e-8);

}  // namespace rqi
