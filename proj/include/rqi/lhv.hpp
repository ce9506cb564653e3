#pragma once

#include <cstdint>

#include "rqi/bell.hpp"

// Bell's local-hidden-variable constructions: the single-particle hemisphere
// model and the singlet sign model, as exact formulas plus seeded Monte
// Carlo estimators.
//
// Reproducibility contract: the hidden variable is sampled by inverse
// transform (z uniform on the interval, azimuth uniform on [0, 2pi)) from a
// std::mt19937_64 stream seeded directly with the given seed; uniform
// doubles are produced as (x >> 11) * 2^-53 rather than through
// std::uniform_real_distribution, whose mapping is implementation-defined.
// Estimates are therefore bit-identical for a given (inputs, seed) on any
// conforming platform. sign(0) counts as +1 (an event of measure zero).

namespace rqi {

using RngSeed = std::uint64_t;

/// One draw of the singlet sign model: hidden direction and the two
/// deterministic outcomes A = sign(a.lambda), B = -sign(b.lambda).
struct LhvSample {
    Vec3 lambda;
    int a_outcome;  // +-1
    int b_outcome;  // +-1
};

struct McEstimate {
    double estimate;
    double std_error;
};

/// Singlet sign-model correlation: -1 + 2 theta / pi for the angle between
/// the analyzers, theta in [0, pi].
double lhv_singlet_exact(double theta);

/// The measurement-dependent (nonlocal) variant that reproduces the quantum
/// cosine, -cos(theta), via the same adjusted-angle map. Not a local model;
/// provided for comparison output only.
double lhv_singlet_exact_adjusted(double theta);

struct SingleParticleLhv {
    double value;        // cos(theta)
    double theta_prime;  // adjusted analyzer angle pi (1 - cos theta) / 2
};

/// Single-particle hemisphere model: the adjusted angle theta' makes the
/// linear hemisphere expectation 1 - 2 theta'/pi equal cos(theta).
SingleParticleLhv lhv_single_exact(double theta);

/// Monte Carlo mean of A*B over n uniform hidden directions.
McEstimate lhv_singlet_mc(const Direction& a, const Direction& b, std::uint64_t n, RngSeed seed);

/// Monte Carlo mean of sign(lambda.a') with lambda uniform on the hemisphere
/// about the polarization axis and a' placed at the adjusted angle theta'.
McEstimate lhv_single_mc(double theta, std::uint64_t n, RngSeed seed);

}  // namespace rqi
