#pragma once

#include <array>
#include <string>
#include <vector>

#include "rqi/minkowski.hpp"

// 5x5 affine representation of the Poincare generators. The top-left 4x4
// block carries the Lorentz part, the fifth column the translations, and the
// fifth row is identically zero. The abstract algebra has Hermitian
// generators with explicit factors of i; a faithful finite-dimensional
// unitary representation does not exist (the group is noncompact), so the
// factor i is absorbed into real matrices. With that absorption the full
// commutator table closes with real structure constants:
//
//   [J_i, J_j] =  eps_ijk J_k        [K_i, K_j] = -eps_ijk J_k
//   [J_i, K_j] =  eps_ijk K_k        [K_i, P_j] = -delta_ij H
//   [J_i, P_j] =  eps_ijk P_k        [K_i, H]   = -P_i
//   [P_i, P_j] = [J_i, H] = [P_i, H] = 0
//
// and exp(theta*J_3) equals rotation_about(z, theta), exp(artanh(beta)*K_1)
// equals boost_along(x, beta).
//
// Index conventions: J_1 = M^{23}, J_2 = M^{31}, J_3 = M^{12}, K_i = M^{i0}.
// The epsilon-contraction definition of J without the conventional 1/2
// double-counts and is not used; the commutator table above requires the
// normalization chosen here.

namespace rqi {

using Mat5 = std::array<std::array<double, 5>, 5>;

enum class GeneratorLabel { J1, J2, J3, K1, K2, K3, P0, P1, P2, P3 };

struct AffineGenerator {
    Mat5 entries{};

    double operator()(int r, int c) const { return entries[r][c]; }
};

/// The canonical generator for a label.
AffineGenerator generator(GeneratorLabel label);

/// M^{mu nu} in the affine representation; antisymmetric in (mu, nu).
AffineGenerator lorentz_generator(int mu, int nu);

/// P^mu: zero Lorentz block, fifth column e_mu.
AffineGenerator translation_generator(int mu);

/// AB - BA.
Mat5 commutator(const AffineGenerator& a, const AffineGenerator& b);

/// One row of the verification report: relation family and the largest
/// entrywise deviation found across all index combinations in it.
struct RelationCheck {
    std::string name;
    double max_deviation = 0.0;
};

struct AlgebraReport {
    std::vector<RelationCheck> relations;

    double max_deviation() const;
    bool passed(double tol) const { return max_deviation() <= tol; }
};

/// A full set of generators; tests inject faults by perturbing one entry.
struct GeneratorSet {
    std::array<AffineGenerator, 3> j;
    std::array<AffineGenerator, 3> k;
    std::array<AffineGenerator, 4> p;  // p[0] is H

    static GeneratorSet canonical();
};

/// Checks every relation of the commutator table on the given generators.
/// Relation order: [J,P], [J,J], [J,K], [P,P], [J,H], [P,H], [K,K], [K,P], [K,H].
AlgebraReport verify_algebra(const GeneratorSet& gens);
AlgebraReport verify_algebra();

/// Rest-frame spin vector from the Pauli-Lubanski four-vector of a particle
/// with momentum p: S_i = W_i/m - W_t p_i / (m(m+E)). Equals the spatial
/// part of L^-1(p)W divided by m; the time component of L^-1(p)W vanishes
/// for transverse W. Requires minkowski_dot(W, p) = 0 within tol.
Vec3 pauli_lubanski_rest(const FourMomentum& p, const FourVector& w, double tol = kDefaultTolerance);

struct TransversalityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace rqi
