#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rqi/lhv.hpp"
#include "support/oracles.hpp"

using namespace rqi;

namespace {
constexpr double kPi = 3.14159265358979323846;

Direction tilted(double theta) { return Direction(std::sin(theta), 0.0, std::cos(theta)); }
}  // namespace

TEST_CASE("lhv_singlet_exact: linear law and range checks") {
    CHECK(lhv_singlet_exact(0.0) == doctest::Approx(-1.0));
    CHECK(lhv_singlet_exact(kPi / 2) == doctest::Approx(0.0));
    CHECK(lhv_singlet_exact(kPi) == doctest::Approx(1.0));
    CHECK(lhv_singlet_exact(kPi / 3) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(lhv_singlet_exact(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(lhv_singlet_exact(kPi + 0.1), std::invalid_argument);
}

TEST_CASE("lhv_singlet_exact_adjusted: the nonlocal variant reproduces the quantum cosine") {
    CHECK(lhv_singlet_exact_adjusted(0.0) == doctest::Approx(-1.0));
    CHECK(lhv_singlet_exact_adjusted(kPi / 3) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(lhv_singlet_exact_adjusted(kPi) == doctest::Approx(1.0));
}

TEST_CASE("lhv_single_exact: adjusted angle fixed points") {
    const SingleParticleLhv at_zero = lhv_single_exact(0.0);
    CHECK(at_zero.value == doctest::Approx(1.0));
    CHECK(at_zero.theta_prime == doctest::Approx(0.0));

    const SingleParticleLhv at_quarter = lhv_single_exact(kPi / 2);
    CHECK(at_quarter.value == doctest::Approx(0.0));
    CHECK(at_quarter.theta_prime == doctest::Approx(kPi / 2));

    const SingleParticleLhv at_pi = lhv_single_exact(kPi);
    CHECK(at_pi.value == doctest::Approx(-1.0));
    CHECK(at_pi.theta_prime == doctest::Approx(kPi));

    // the defining identity 1 - 2 theta'/pi = cos(theta) on a sweep
    for (double theta = 0.0; theta <= kPi + 1e-9; theta += kPi / 17) {
        const SingleParticleLhv v = lhv_single_exact(std::min(theta, kPi));
        CHECK(v.value == doctest::Approx(std::cos(std::min(theta, kPi))).epsilon(1e-14));
        CHECK(1.0 - 2.0 * v.theta_prime / kPi == doctest::Approx(v.value).epsilon(1e-14));
    }
}

TEST_CASE("lhv_singlet_mc: aligned analyzers are deterministic") {
    const McEstimate mc = lhv_singlet_mc(Direction(0, 0, 1), Direction(0, 0, 1), 100000, 7);
    CHECK(mc.estimate == -1.0);
    CHECK(mc.std_error == 0.0);
}

TEST_CASE("lhv_singlet_mc: converges to the linear law") {
    const McEstimate perp = lhv_singlet_mc(Direction(0, 0, 1), tilted(kPi / 2), 1000000, 11);
    CHECK(std::abs(perp.estimate) < 0.005);

    const McEstimate third = lhv_singlet_mc(Direction(0, 0, 1), tilted(kPi / 3), 1000000, 13);
    CHECK(std::abs(third.estimate - (-1.0 / 3.0)) < 5.0 * third.std_error);

    CHECK_THROWS_AS(lhv_singlet_mc(Direction(0, 0, 1), Direction(0, 1, 0), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("lhv_singlet_mc: bit-identical for a fixed seed") {
    const McEstimate first = lhv_singlet_mc(Direction(0, 0, 1), tilted(1.1), 200000, 12345);
    const McEstimate second = lhv_singlet_mc(Direction(0, 0, 1), tilted(1.1), 200000, 12345);
    CHECK(first.estimate == second.estimate);
    CHECK(first.std_error == second.std_error);

    const McEstimate other_seed = lhv_singlet_mc(Direction(0, 0, 1), tilted(1.1), 200000, 54321);
    CHECK(first.estimate != other_seed.estimate);
}

TEST_CASE("lhv_singlet_mc: depends on the directions only through their angle") {
    const double theta = 0.9;
    const McEstimate planar = lhv_singlet_mc(Direction(0, 0, 1), tilted(theta), 400000, 99);
    // the same pair rotated to an unrelated orientation
    const Vec3 a{0.36, -0.48, 0.8};
    const Vec3 ortho = normalized(cross(a, Vec3{0.0, 1.0, 0.2}));
    const Vec3 b = a * std::cos(theta) + ortho * std::sin(theta);
    const McEstimate rotated = lhv_singlet_mc(Direction(a), Direction(b), 400000, 99);
    const double combined = std::hypot(planar.std_error, rotated.std_error);
    CHECK(std::abs(planar.estimate - rotated.estimate) < 5.0 * combined);
}

TEST_CASE("lhv_single_mc: deterministic at zero angle, converges elsewhere") {
    const McEstimate aligned = lhv_single_mc(0.0, 50000, 3);
    CHECK(aligned.estimate == 1.0);

    const McEstimate wide = lhv_single_mc(2.0 * kPi / 3.0, 1000000, 17);
    CHECK(std::abs(wide.estimate - (-0.5)) < 0.005);

    const McEstimate repeat = lhv_single_mc(2.0 * kPi / 3.0, 1000000, 17);
    CHECK(wide.estimate == repeat.estimate);
}

TEST_CASE("Monte Carlo error scales like 1/sqrt(n)") {
    const double theta = kPi / 3;
    const double exact = lhv_singlet_exact(theta);
    double mean_err[3] = {0.0, 0.0, 0.0};
    const std::uint64_t sizes[3] = {10000, 100000, 1000000};
    const int n_seeds = 12;
    for (int s = 0; s < n_seeds; ++s) {
        for (int k = 0; k < 3; ++k) {
            const McEstimate mc =
                lhv_singlet_mc(Direction(0, 0, 1), tilted(theta), sizes[k], 1000 + s);
            mean_err[k] += std::abs(mc.estimate - exact) / n_seeds;
        }
    }
    const double expected_ratio = std::sqrt(10.0);
    CHECK(mean_err[0] / mean_err[1] > expected_ratio / 3.0);
    CHECK(mean_err[0] / mean_err[1] < expected_ratio * 3.0);
    CHECK(mean_err[1] / mean_err[2] > expected_ratio / 3.0);
    CHECK(mean_err[1] / mean_err[2] < expected_ratio * 3.0);
}
