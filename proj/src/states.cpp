#include "rqi/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace rqi {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double norm_sq(const Amplitudes& a) {
    double s = 0.0;
    for (const Complex& c : a) s += std::norm(c);
    return s;
}

}  // namespace

std::string to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
    }
    return "?";
}

BellKind parse_bell_kind(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "phi+") return BellKind::PhiPlus;
    if (s == "phi-") return BellKind::PhiMinus;
    if (s == "psi+") return BellKind::PsiPlus;
    if (s == "psi-") return BellKind::PsiMinus;
    throw std::invalid_argument("unknown Bell state '" + name + "' (expected phi+/phi-/psi+/psi-)");
}

BipartiteState::BipartiteState(const ParticleLabel& label1, const ParticleLabel& label2,
                               const Amplitudes& amplitudes, double kinematic_factor)
    : label1_(label1), label2_(label2), amps_(amplitudes), kinematic_factor_(kinematic_factor) {
    if (std::abs(norm_sq(amps_) - 1.0) > 1e-8) {
        throw std::invalid_argument("BipartiteState: spin amplitudes must be unit-normalized");
    }
    if (!(kinematic_factor_ > 0.0) || !std::isfinite(kinematic_factor_)) {
        throw std::invalid_argument("BipartiteState: kinematic factor must be positive");
    }
}

BipartiteState BipartiteState::with_normalized(const ParticleLabel& label1,
                                               const ParticleLabel& label2, Amplitudes amplitudes,
                                               double kinematic_factor) {
    const double n = std::sqrt(norm_sq(amplitudes));
    if (!(n > 0.0)) {
        throw std::invalid_argument("BipartiteState: cannot normalize zero amplitudes");
    }
    for (Complex& c : amplitudes) c /= n;
    return BipartiteState(label1, label2, amplitudes, kinematic_factor);
}

double BipartiteState::spin_norm() const { return std::sqrt(norm_sq(amps_)); }

BipartiteState bell_state(BellKind kind, double beta, double mass) {
    const FourMomentum p1 = FourMomentum::from_beta(mass, beta, unit_z());
    const FourMomentum p2 = FourMomentum::from_beta(mass, -beta, unit_z());
    Amplitudes a{};
    switch (kind) {
        case BellKind::PhiPlus: a = {kInvSqrt2, 0.0, 0.0, kInvSqrt2}; break;
        case BellKind::PhiMinus: a = {kInvSqrt2, 0.0, 0.0, -kInvSqrt2}; break;
        case BellKind::PsiPlus: a = {0.0, kInvSqrt2, kInvSqrt2, 0.0}; break;
        case BellKind::PsiMinus: a = {0.0, kInvSqrt2, -kInvSqrt2, 0.0}; break;
    }
    return BipartiteState(ParticleLabel{p1}, ParticleLabel{p2}, a);
}

BipartiteState boost_state(const BipartiteState& state, const LorentzMatrix& lambda,
                           double purity_tol) {
    const FourMomentum& p1 = state.label1().momentum;
    const FourMomentum& p2 = state.label2().momentum;
    const SpinHalfRep d1 = wigner_rotation(lambda, p1, purity_tol).spin_half();
    const SpinHalfRep d2 = wigner_rotation(lambda, p2, purity_tol).spin_half();

    // (D1 (x) D2) acting on the {uu, ud, du, dd} amplitude vector.
    const Amplitudes& a = state.amplitudes();
    Amplitudes out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) s += d1(i, k) * d2(j, l) * a[2 * k + l];
            }
            out[2 * i + j] = s;
        }
    }

    const FourMomentum q1 = lambda * p1;
    const FourMomentum q2 = lambda * p2;
    const double factor = state.kinematic_factor() *
                          std::sqrt(q1.energy() / p1.energy()) *
                          std::sqrt(q2.energy() / p2.energy());
    return BipartiteState(ParticleLabel{q1}, ParticleLabel{q2}, out, factor);
}

Amplitudes transform_bell_closed_form(BellKind kind, double theta_w) {
    const double c = std::cos(theta_w);
    const double s = std::sin(theta_w);
    switch (kind) {
        case BellKind::PhiPlus:
            return {c * kInvSqrt2, -s * kInvSqrt2, s * kInvSqrt2, c * kInvSqrt2};
        case BellKind::PhiMinus:
            return {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
        case BellKind::PsiPlus:
            return {0.0, kInvSqrt2, kInvSqrt2, 0.0};
        case BellKind::PsiMinus:
            return {s * kInvSqrt2, c * kInvSqrt2, -c * kInvSqrt2, s * kInvSqrt2};
    }
    throw std::invalid_argument("transform_bell_closed_form: unknown Bell kind");
}

Complex spin_inner_product(const BipartiteState& s1, const BipartiteState& s2, double label_tol) {
    auto labels_match = [&](const ParticleLabel& a, const ParticleLabel& b) {
        return std::abs(a.momentum.mass() - b.momentum.mass()) <= label_tol &&
               norm(a.momentum.momentum() - b.momentum.momentum()) <= label_tol;
    };
    if (!labels_match(s1.label1(), s2.label1()) || !labels_match(s1.label2(), s2.label2())) {
        return 0.0;
    }
    Complex s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(s1.amplitudes()[i]) * s2.amplitudes()[i];
    return s;
}

}  // namespace rqi
