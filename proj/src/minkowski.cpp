#include "rqi/minkowski.hpp"

#include <algorithm>
#include <cmath>

namespace rqi {

namespace {

// eta = diag(-1,+1,+1,+1)
constexpr double kEta[4] = {-1.0, 1.0, 1.0, 1.0};

double det4(const Mat4& m) {
    // Laplace expansion by 2x2 minors of the first two rows against the
    // complementary minors of the last two.
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    return minor2(0, 1, 0, 1) * minor2(2, 3, 2, 3) - minor2(0, 1, 0, 2) * minor2(2, 3, 1, 3) +
           minor2(0, 1, 0, 3) * minor2(2, 3, 1, 2) + minor2(0, 1, 1, 2) * minor2(2, 3, 0, 3) -
           minor2(0, 1, 1, 3) * minor2(2, 3, 0, 2) + minor2(0, 1, 2, 3) * minor2(2, 3, 0, 1);
}

void require_finite(const FourVector& v, const char* what) {
    if (!(std::isfinite(v.t) && std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z))) {
        throw std::invalid_argument(std::string(what) + ": non-finite component");
    }
}

}  // namespace

double minkowski_dot(const FourVector& u, const FourVector& v) {
    return -u.t * v.t + u.x * v.x + u.y * v.y + u.z * v.z;
}

FourMomentum::FourMomentum(double mass, const Vec3& momentum) : mass_(mass), p_(momentum) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::invalid_argument("FourMomentum: mass must be strictly positive and finite");
    }
    if (!is_finite(p_)) {
        throw std::invalid_argument("FourMomentum: non-finite spatial momentum");
    }
}

FourMomentum FourMomentum::from_beta(double mass, double beta, const Vec3& axis) {
    if (std::abs(beta) > kMaxBeta) {
        throw SuperluminalError("FourMomentum::from_beta: |beta| must be < 1");
    }
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    if (beta == 0.0) return FourMomentum(mass, {0.0, 0.0, 0.0});
    return FourMomentum(mass, normalized(axis) * (gamma * beta * mass));
}

double FourMomentum::energy() const { return std::sqrt(mass_ * mass_ + dot(p_, p_)); }

FourVector FourMomentum::four_vector() const { return {energy(), p_.x, p_.y, p_.z}; }

LorentzValidation validate_lorentz(const Mat4& m, double tol) {
    LorentzValidation report;
    // max entry of |M^T eta M - eta|
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            double s = 0.0;
            for (int mu = 0; mu < 4; ++mu) s += kEta[mu] * m[mu][a] * m[mu][b];
            const double target = (a == b) ? kEta[a] : 0.0;
            report.max_metric_deviation = std::max(report.max_metric_deviation, std::abs(s - target));
        }
    }
    report.det_deviation = std::abs(det4(m) - 1.0);
    report.orthochronous = m[0][0] >= 1.0 - tol;
    return report;
}

LorentzMatrix LorentzMatrix::from_entries(const Mat4& entries, double tol) {
    const LorentzValidation v = validate_lorentz(entries, tol);
    if (!v.passed(tol)) {
        throw NotALorentzMatrixError(
            "from_entries: matrix fails Lorentz-group checks (metric deviation " +
            std::to_string(v.max_metric_deviation) + ", det deviation " +
            std::to_string(v.det_deviation) + ", orthochronous " +
            (v.orthochronous ? "yes" : "no") + ")");
    }
    return LorentzMatrix(entries);
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& o) const {
    Mat4 r{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m_[i][k] * o.m_[k][j];
            r[i][j] = s;
        }
    }
    return LorentzMatrix(r);
}

FourVector LorentzMatrix::operator*(const FourVector& v) const {
    require_finite(v, "LorentzMatrix*FourVector");
    const double in[4] = {v.t, v.x, v.y, v.z};
    double out[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) out[i] += m_[i][k] * in[k];
    }
    return {out[0], out[1], out[2], out[3]};
}

FourMomentum LorentzMatrix::operator*(const FourMomentum& p) const {
    const FourVector v = (*this) * p.four_vector();
    // Mass is the invariant; the transformed energy is recomputed from it.
    return FourMomentum(p.mass(), v.spatial());
}

LorentzMatrix LorentzMatrix::inverse() const {
    Mat4 r{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) r[i][j] = kEta[i] * m_[j][i] * kEta[j];
    }
    return LorentzMatrix(r);
}

LorentzMatrix standard_boost(const FourMomentum& p) {
    const double m = p.mass();
    const double e = p.energy();
    const Vec3 mom = p.momentum();
    Mat4 L{};
    L[0][0] = e / m;
    for (int i = 0; i < 3; ++i) {
        L[0][i + 1] = L[i + 1][0] = mom[i] / m;
        for (int j = 0; j < 3; ++j) {
            L[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + mom[i] * mom[j] / (m * (m + e));
        }
    }
    return LorentzMatrix(L);
}

LorentzMatrix inverse_standard_boost(const FourMomentum& p) {
    return standard_boost(FourMomentum(p.mass(), -p.momentum()));
}

LorentzMatrix boost_along(const Vec3& axis, double beta) {
    if (!std::isfinite(beta) || std::abs(beta) > kMaxBeta) {
        throw SuperluminalError("boost_along: velocity must be < 1 in magnitude");
    }
    const Vec3 n = normalized(axis);
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    const double gb = gamma * beta;
    Mat4 L{};
    L[0][0] = gamma;
    for (int i = 0; i < 3; ++i) {
        L[0][i + 1] = L[i + 1][0] = -gb * n[i];
        for (int j = 0; j < 3; ++j) {
            L[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + (gamma - 1.0) * n[i] * n[j];
        }
    }
    return LorentzMatrix(L);
}

LorentzMatrix rotation_about(const Vec3& axis, double angle) {
    const Vec3 n = normalized(axis);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat4 R{};
    R[0][0] = 1.0;
    // Rodrigues: R = c I + s [n]_x + (1-c) n n^T
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            R[i + 1][j + 1] = (i == j ? c : 0.0) + (1.0 - c) * n[i] * n[j];
        }
    }
    R[1][2] += -s * n.z;
    R[1][3] += s * n.y;
    R[2][1] += s * n.z;
    R[2][3] += -s * n.x;
    R[3][1] += -s * n.y;
    R[3][2] += s * n.x;
    return LorentzMatrix(R);
}

Rotation3::Rotation3(const Vec3& ax, double ang) : axis(normalized(ax)), angle(ang) {
    constexpr double pi = 3.14159265358979323846;
    if (!std::isfinite(angle) || angle <= -pi - 1e-12 || angle > pi + 1e-12) {
        throw std::invalid_argument("Rotation3: angle must lie in (-pi, pi]");
    }
}

Rotation3 axis_angle_from_rotation(const LorentzMatrix& M, double tol) {
    // Check the time row/column is untouched.
    double time_dev = std::abs(M(0, 0) - 1.0);
    for (int i = 1; i < 4; ++i) {
        time_dev = std::max({time_dev, std::abs(M(0, i)), std::abs(M(i, 0))});
    }
    if (time_dev > tol) {
        throw NotARotationError("axis_angle_from_rotation: time row/column not identity (deviation " +
                                std::to_string(time_dev) + ")");
    }
    // Spatial block must be orthogonal with determinant +1.
    double orth_dev = 0.0;
    for (int i = 1; i < 4; ++i) {
        for (int j = 1; j < 4; ++j) {
            double s = 0.0;
            for (int k = 1; k < 4; ++k) s += M(k, i) * M(k, j);
            orth_dev = std::max(orth_dev, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    }
    if (orth_dev > tol) {
        throw NotARotationError("axis_angle_from_rotation: spatial block not orthogonal (deviation " +
                                std::to_string(orth_dev) + ")");
    }
    const LorentzValidation v = M.validate(tol);
    if (v.det_deviation > tol) {
        throw NotARotationError("axis_angle_from_rotation: determinant not +1 (deviation " +
                                std::to_string(v.det_deviation) + ")");
    }

    const double trace3 = M(1, 1) + M(2, 2) + M(3, 3);
    const double c = std::clamp((trace3 - 1.0) / 2.0, -1.0, 1.0);
    const Vec3 anti = {(M(3, 2) - M(2, 3)) / 2.0, (M(1, 3) - M(3, 1)) / 2.0,
                       (M(2, 1) - M(1, 2)) / 2.0};
    const double s = norm(anti);
    const double angle = std::atan2(s, c);

    if (s > 1e-12) {
        return Rotation3(anti / s, angle);
    }
    if (c > 0.0) {
        // Identity within rounding: axis is conventional.
        return Rotation3(unit_z(), angle);
    }
    // angle ~ pi: recover the axis from the symmetric part (R + I)/2 = n n^T.
    const double d[3] = {(M(1, 1) + 1.0) / 2.0, (M(2, 2) + 1.0) / 2.0, (M(3, 3) + 1.0) / 2.0};
    int k = 0;
    if (d[1] > d[k]) k = 1;
    if (d[2] > d[k]) k = 2;
    Vec3 axis{};
    axis[k] = std::sqrt(std::max(d[k], 0.0));
    for (int j = 0; j < 3; ++j) {
        if (j != k) axis[j] = (M(k + 1, j + 1) + M(j + 1, k + 1)) / (4.0 * axis[k]);
    }
    axis = normalized(axis);
    // Tie-break: largest-magnitude component positive (first such on ties).
    int big = 0;
    for (int j = 1; j < 3; ++j) {
        if (std::abs(axis[j]) > std::abs(axis[big])) big = j;
    }
    if (axis[big] < 0.0) axis = -axis;
    return Rotation3(axis, angle);
}

}  // namespace rqi
