#include "rqi/little_group.hpp"

#include <cmath>

namespace rqi {

SpinHalfRep SpinHalfRep::operator*(const SpinHalfRep& o) const {
    return SpinHalfRep(m_[0][0] * o.m_[0][0] + m_[0][1] * o.m_[1][0],
                       m_[0][0] * o.m_[0][1] + m_[0][1] * o.m_[1][1],
                       m_[1][0] * o.m_[0][0] + m_[1][1] * o.m_[1][0],
                       m_[1][0] * o.m_[0][1] + m_[1][1] * o.m_[1][1]);
}

SpinHalfRep SpinHalfRep::adjoint() const {
    return SpinHalfRep(std::conj(m_[0][0]), std::conj(m_[1][0]), std::conj(m_[0][1]),
                       std::conj(m_[1][1]));
}

double SpinHalfRep::unitarity_deviation() const {
    const SpinHalfRep p = (*this) * adjoint();
    double dev = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            dev = std::max(dev, std::abs(p(r, c) - (r == c ? Complex(1.0) : Complex(0.0))));
        }
    }
    return dev;
}

SpinHalfRep spin_half_rep(const Vec3& axis, double angle) {
    const Vec3 n = normalized(axis);
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const Complex i(0.0, 1.0);
    // c*I + i*s*(n_x sigma_x + n_y sigma_y + n_z sigma_z)
    return SpinHalfRep(c + i * s * n.z, s * (n.y + i * n.x), s * (-n.y + i * n.x), c - i * s * n.z);
}

double WignerRotation::angle_about(const Vec3& ref) const {
    const Vec3 r = normalized(ref);
    const double align = dot(r, rotation.axis);
    if (rotation.angle > 1e-12 && std::abs(align) < 0.9) {
        throw std::invalid_argument("angle_about: reference axis not collinear with rotation axis");
    }
    return align >= 0.0 ? rotation.angle : -rotation.angle;
}

SpinHalfRep WignerRotation::spin_half() const {
    return spin_half_rep(rotation.axis, rotation.angle).adjoint();
}

WignerRotation wigner_rotation(const LorentzMatrix& lambda, const FourMomentum& p,
                               double purity_tol) {
    const LorentzValidation v = lambda.validate();
    if (!v.passed(kDefaultTolerance)) {
        throw NotALorentzMatrixError("wigner_rotation: Lambda fails Lorentz validation");
    }
    const FourMomentum boosted = lambda * p;
    const LorentzMatrix w = inverse_standard_boost(boosted) * lambda * standard_boost(p);
    // Throws NotARotationError (naming the check) if the product is impure.
    const Rotation3 rot = axis_angle_from_rotation(w, purity_tol);
    return WignerRotation{w, rot};
}

double wigner_angle_perpendicular(double beta, double beta_prime) {
    if (!(beta >= 0.0) || !(beta_prime >= 0.0) || beta > kMaxBeta || beta_prime > kMaxBeta) {
        throw SuperluminalError("wigner_angle_perpendicular: velocities must lie in [0, 1)");
    }
    const double g = 1.0 / std::sqrt(1.0 - beta * beta);
    const double gp = 1.0 / std::sqrt(1.0 - beta_prime * beta_prime);
    return std::atan2(-gp * g * beta_prime * beta, gp + g);
}

double wigner_angle_two_boosts(double beta_x, double beta_y) {
    if (!(beta_x >= 0.0) || !(beta_y >= 0.0) || beta_x > kMaxBeta || beta_y > kMaxBeta) {
        throw SuperluminalError("wigner_angle_two_boosts: velocities must lie in [0, 1)");
    }
    const double gx = 1.0 / std::sqrt(1.0 - beta_x * beta_x);
    const double gy = 1.0 / std::sqrt(1.0 - beta_y * beta_y);
    return std::atan2(-gy * gx * beta_y * beta_x, gy + gx);
}

}  // namespace rqi
