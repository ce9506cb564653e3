#include "rqi/lhv.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace rqi {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_angle(double theta, const char* what) {
    if (!(theta >= 0.0 && theta <= kPi + 1e-12)) {
        throw std::invalid_argument(std::string(what) + ": angle must lie in [0, pi]");
    }
}

double sign_plus(double x) { return x < 0.0 ? -1.0 : 1.0; }

struct UniformStream {
    std::mt19937_64 engine;

    explicit UniformStream(RngSeed seed) : engine(seed) {}

    // 53-bit mantissa uniform in [0, 1).
    double next() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

    // Uniform on the sphere by inverse transform: z in [-1,1), phi in [0,2pi).
    Vec3 sphere() {
        const double z = 2.0 * next() - 1.0;
        const double phi = 2.0 * kPi * next();
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

    // Uniform on the upper hemisphere: z in [0,1).
    Vec3 hemisphere() {
        const double z = next();
        const double phi = 2.0 * kPi * next();
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }
};

McEstimate summarize(double sum, std::uint64_t n) {
    const double mean = sum / static_cast<double>(n);
    // Outcomes are +-1, so the sample variance is 1 - mean^2.
    const double var = std::max(0.0, 1.0 - mean * mean);
    return McEstimate{mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace

double lhv_singlet_exact(double theta) {
    require_angle(theta, "lhv_singlet_exact");
    return -1.0 + 2.0 * theta / kPi;
}

double lhv_singlet_exact_adjusted(double theta) {
    require_angle(theta, "lhv_singlet_exact_adjusted");
    return -std::cos(theta);
}

SingleParticleLhv lhv_single_exact(double theta) {
    require_angle(theta, "lhv_single_exact");
    const double theta_prime = kPi * (1.0 - std::cos(theta)) / 2.0;
    return SingleParticleLhv{1.0 - 2.0 * theta_prime / kPi, theta_prime};
}

McEstimate lhv_singlet_mc(const Direction& a, const Direction& b, std::uint64_t n, RngSeed seed) {
    if (n == 0) throw std::invalid_argument("lhv_singlet_mc: need at least one sample");
    UniformStream rng(seed);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const Vec3 lambda = rng.sphere();
        sum += sign_plus(dot(a.n, lambda)) * (-sign_plus(dot(b.n, lambda)));
    }
    return summarize(sum, n);
}

McEstimate lhv_single_mc(double theta, std::uint64_t n, RngSeed seed) {
    require_angle(theta, "lhv_single_mc");
    if (n == 0) throw std::invalid_argument("lhv_single_mc: need at least one sample");
    // Polarization along z; the adjusted analyzer sits in the x-z plane.
    const double theta_prime = lhv_single_exact(theta).theta_prime;
    const Vec3 a_prime = {std::sin(theta_prime), 0.0, std::cos(theta_prime)};
    UniformStream rng(seed);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        sum += sign_plus(dot(rng.hemisphere(), a_prime));
    }
    return summarize(sum, n);
}

}  // namespace rqi
