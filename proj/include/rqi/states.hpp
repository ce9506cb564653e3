#pragma once

#include <array>
#include <complex>
#include <string>

#include "rqi/little_group.hpp"
#include "rqi/minkowski.hpp"

// Two-particle momentum-spin states with sharp momentum labels. The
// continuum delta normalization is treated symbolically: overlaps between
// states with different momentum labels are declared zero, equal labels
// contribute the spin-sector inner product. The spin amplitudes live over
// the fixed ordered basis {uu, ud, du, dd} with particle 1 as the left
// tensor factor, and are kept unit-normalized; the energy-ratio factor
// sqrt((Lp1)^0 (Lp2)^0 / (p1^0 p2^0)) accumulated by boosts is tracked
// separately in kinematic_factor, where it cancels in every expectation
// value because both branches of a state share the same momentum pair.

namespace rqi {

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string to_string(BellKind kind);

/// Parses "phi+", "phi-", "psi+", "psi-" (case-insensitive).
BellKind parse_bell_kind(const std::string& name);

using Amplitudes = std::array<Complex, 4>;

struct ParticleLabel {
    FourMomentum momentum;
};

class BipartiteState {
public:
    /// Requires unit-normalized amplitudes (within 1e-8) and a positive
    /// kinematic factor.
    BipartiteState(const ParticleLabel& label1, const ParticleLabel& label2,
                   const Amplitudes& amplitudes, double kinematic_factor = 1.0);

    /// Rescales the amplitudes to unit norm before constructing.
    static BipartiteState with_normalized(const ParticleLabel& label1, const ParticleLabel& label2,
                                          Amplitudes amplitudes, double kinematic_factor = 1.0);

    const ParticleLabel& label1() const { return label1_; }
    const ParticleLabel& label2() const { return label2_; }
    const Amplitudes& amplitudes() const { return amps_; }
    double kinematic_factor() const { return kinematic_factor_; }

    double spin_norm() const;

private:
    ParticleLabel label1_;
    ParticleLabel label2_;
    Amplitudes amps_;
    double kinematic_factor_;
};

/// Bell state in the zero-momentum frame: particle 1 carries +gamma beta m z,
/// particle 2 the opposite. Amplitudes (1,0,0,+-1)/sqrt(2) for Phi+-,
/// (0,1,+-1,0)/sqrt(2) for Psi+-.
BipartiteState bell_state(BellKind kind, double beta, double mass);

/// Applies Lambda: momenta map to Lambda p_i, amplitudes by D1 (x) D2 with
/// D_i the spin-1/2 transport of the particle's own Wigner rotation, and the
/// kinematic factor picks up the energy ratio square roots.
BipartiteState boost_state(const BipartiteState& state, const LorentzMatrix& lambda,
                           double purity_tol = 1e-8);

/// Closed-form amplitude images of the four Bell states under a
/// perpendicular boost with Wigner angle theta_w:
///   Phi+ -> cos(theta_w) Phi+ - sin(theta_w) Psi-,
///   Psi- -> sin(theta_w) Phi+ + cos(theta_w) Psi-,
///   Phi- and Psi+ unchanged.
Amplitudes transform_bell_closed_form(BellKind kind, double theta_w);

/// Conjugate-linear in the first argument. Zero when the momentum labels
/// differ beyond label_tol (symbolic delta convention).
Complex spin_inner_product(const BipartiteState& s1, const BipartiteState& s2,
                           double label_tol = 1e-9);

}  // namespace rqi
