#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rqi/minkowski.hpp"
#include "support/oracles.hpp"

using namespace rqi;

namespace {
constexpr double kPi = 3.14159265358979323846;

double max_entry_diff(const LorentzMatrix& a, const LorentzMatrix& b) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    }
    return d;
}

LorentzMatrix random_proper_lorentz(oracle::Rng& rng) {
    // rotation * boost * rotation: generic proper orthochronous element
    const LorentzMatrix r1 = rotation_about(rng.unit_vec3(), rng.range(-kPi, kPi));
    const LorentzMatrix b = boost_along(rng.unit_vec3(), rng.range(-0.95, 0.95));
    const LorentzMatrix r2 = rotation_about(rng.unit_vec3(), rng.range(-kPi, kPi));
    return r1 * b * r2;
}
}  // namespace

TEST_CASE("minkowski_dot: signature and on-shell momenta") {
    const FourVector unit_time{1, 0, 0, 0};
    CHECK(minkowski_dot(unit_time, unit_time) == doctest::Approx(-1.0).epsilon(1e-15));

    // on-shell: p.p = -m^2 for m=1, beta=0.6 along z
    const double g = 1.25;
    const FourVector p{g, 0, 0, g * 0.6};
    CHECK(minkowski_dot(p, p) == doctest::Approx(-1.0).epsilon(1e-14));

    const FourVector light{1, 1, 0, 0};
    CHECK(minkowski_dot(light, light) == doctest::Approx(0.0));
}

TEST_CASE("minkowski_dot: symmetric and Lorentz invariant") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const FourVector u{rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)};
        const FourVector v{rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)};
        CHECK(minkowski_dot(u, v) == doctest::Approx(minkowski_dot(v, u)).epsilon(1e-15));
        const LorentzMatrix lam = random_proper_lorentz(rng);
        REQUIRE(lam.validate().passed(1e-12));
        CHECK(std::abs(minkowski_dot(lam * u, lam * v) - minkowski_dot(u, v)) < 1e-12);
    }
}

TEST_CASE("FourMomentum: construction and invariants") {
    CHECK_THROWS_AS(FourMomentum(0.0, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(FourMomentum(-1.0, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(FourMomentum::from_beta(1.0, 1.0, unit_z()), SuperluminalError);

    const FourMomentum p = FourMomentum::from_beta(1.0, 0.6, unit_z());
    CHECK(p.energy() == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(p.momentum().z == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p.energy() >= p.mass());
    CHECK(p.beta() == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("standard_boost: takes rest momentum to p") {
    const FourMomentum p(1.0, {0, 0, 0.75});
    const LorentzMatrix L = standard_boost(p);
    CHECK(L(0, 0) == doctest::Approx(1.25).epsilon(1e-15));
    const FourVector moved = L * FourVector{1, 0, 0, 0};
    CHECK(moved.t == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(moved.z == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(std::abs(moved.x) < 1e-15);

    // rest momentum: identity, no unit-vector ambiguity
    const LorentzMatrix id = standard_boost(FourMomentum(1.0, {0, 0, 0}));
    CHECK(max_entry_diff(id, LorentzMatrix::identity()) == 0.0);
}

TEST_CASE("standard_boost: always a valid Lorentz matrix, maps (m,0,0,0) to (E,p)") {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const double m = rng.range(0.1, 5.0);
        const Vec3 mom = rng.unit_vec3() * rng.range(0.0, 8.0);
        const FourMomentum p(m, mom);
        const LorentzMatrix L = standard_boost(p);
        const LorentzValidation v = L.validate();
        CHECK(v.passed(1e-12));
        const FourVector image = L * FourVector{m, 0, 0, 0};
        CHECK(std::abs(image.t - p.energy()) < 1e-12 * p.energy());
        CHECK(norm(image.spatial() - mom) < 1e-12 * (1.0 + norm(mom)));
    }
}

TEST_CASE("inverse_standard_boost: inverse pair and component signs") {
    const FourMomentum p(1.0, {0, 0, 0.75});
    const FourVector rest = inverse_standard_boost(p) * FourVector{1.25, 0, 0, 0.75};
    CHECK(std::abs(rest.t - 1.0) < 1e-14);
    CHECK(norm(rest.spatial()) < 1e-14);

    const LorentzMatrix prod = inverse_standard_boost(p) * standard_boost(p);
    CHECK(max_entry_diff(prod, LorentzMatrix::identity()) < 1e-12);

    // L^-1(p)^i_0 = -p^i/m
    const FourMomentum q(1.0, {0.3, 0.4, 0});
    const LorentzMatrix Linv = inverse_standard_boost(q);
    CHECK(Linv(1, 0) == doctest::Approx(-0.3).epsilon(1e-14));
    CHECK(Linv(2, 0) == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK(std::abs(Linv(3, 0)) < 1e-15);
}

TEST_CASE("boost_along: frame convention and superluminal rejection") {
    CHECK(max_entry_diff(boost_along(unit_x(), 0.0), LorentzMatrix::identity()) == 0.0);

    const LorentzMatrix b = boost_along(unit_x(), 0.6);
    CHECK(b(0, 0) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(b(0, 1) == doctest::Approx(-0.75).epsilon(1e-15));

    CHECK_THROWS_AS(boost_along(unit_x(), 1.0), SuperluminalError);
    CHECK_THROWS_AS(boost_along(unit_x(), -1.0), SuperluminalError);
}

TEST_CASE("boost_along: collinear composition adds rapidities") {
    oracle::Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 axis = rng.unit_vec3();
        const double b1 = rng.range(-0.9, 0.9);
        const double b2 = rng.range(-0.9, 0.9);
        const LorentzMatrix composed = boost_along(axis, b1) * boost_along(axis, b2);
        const LorentzMatrix direct = boost_along(axis, (b1 + b2) / (1.0 + b1 * b2));
        CHECK(max_entry_diff(composed, direct) < 1e-12);
    }
}

TEST_CASE("rotation_about: conventions") {
    CHECK(max_entry_diff(rotation_about(unit_z(), 0.0), LorentzMatrix::identity()) == 0.0);

    // right-hand rule: z-rotation by pi/2 maps x to y
    const FourVector image = rotation_about(unit_z(), kPi / 2) * FourVector{0, 1, 0, 0};
    CHECK(std::abs(image.x) < 1e-15);
    CHECK(image.y == doctest::Approx(1.0).epsilon(1e-15));

    // the -y rotation block: (x,z) mixing with cos on the diagonal
    const double th = 0.3;
    const LorentzMatrix w = rotation_about(-unit_y(), th);
    CHECK(w(1, 1) == doctest::Approx(std::cos(th)).epsilon(1e-15));
    CHECK(w(3, 3) == doctest::Approx(std::cos(th)).epsilon(1e-15));
    CHECK(w(1, 3) == doctest::Approx(-std::sin(th)).epsilon(1e-15));
    CHECK(w(3, 1) == doctest::Approx(std::sin(th)).epsilon(1e-15));
    CHECK(w(0, 0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(rotation_about({0, 0, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("validate_lorentz: report fields") {
    const LorentzValidation ok = LorentzMatrix::identity().validate();
    CHECK(ok.max_metric_deviation == 0.0);
    CHECK(ok.det_deviation == 0.0);
    CHECK(ok.orthochronous);
    CHECK(ok.passed(1e-12));

    CHECK(standard_boost(FourMomentum(1.0, {0, 0, 0.75})).validate().passed(1e-12));

    // time reversal diag(-1,1,1,1): metric-compatible but not orthochronous
    Mat4 tr{};
    tr[0][0] = -1.0;
    tr[1][1] = tr[2][2] = tr[3][3] = 1.0;
    const LorentzValidation bad = validate_lorentz(tr);
    CHECK(bad.max_metric_deviation == 0.0);
    CHECK(!bad.orthochronous);
    CHECK(!bad.passed(1e-12));
    CHECK_THROWS_AS(LorentzMatrix::from_entries(tr), NotALorentzMatrixError);

    // PT on (t,x): det +1 and metric-compatible, so only orthochronicity fails
    Mat4 pt{};
    pt[0][0] = pt[1][1] = -1.0;
    pt[2][2] = pt[3][3] = 1.0;
    const LorentzValidation bad_pt = validate_lorentz(pt);
    CHECK(bad_pt.det_deviation == 0.0);
    CHECK(!bad_pt.orthochronous);
}

TEST_CASE("axis_angle_from_rotation: conventions and edge cases") {
    const Rotation3 id = axis_angle_from_rotation(LorentzMatrix::identity());
    CHECK(id.angle == 0.0);
    CHECK(id.axis.z == doctest::Approx(1.0));

    const Rotation3 r = axis_angle_from_rotation(rotation_about(-unit_y(), 0.2213));
    CHECK(r.angle == doctest::Approx(0.2213).epsilon(1e-12));
    CHECK(r.axis.y == doctest::Approx(-1.0).epsilon(1e-12));

    // angle pi: axis sign resolved to the positive representative
    const Rotation3 half = axis_angle_from_rotation(rotation_about(unit_z(), kPi));
    CHECK(half.angle == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(half.axis.z == doctest::Approx(1.0).epsilon(1e-10));
    const Rotation3 half_neg = axis_angle_from_rotation(rotation_about(-unit_z(), kPi));
    CHECK(half_neg.axis.z == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(axis_angle_from_rotation(boost_along(unit_x(), 0.5)), NotARotationError);
    CHECK_THROWS_WITH_AS(axis_angle_from_rotation(boost_along(unit_x(), 0.5)),
                         doctest::Contains("time row"), NotARotationError);
}

TEST_CASE("axis_angle_from_rotation: round-trips rotation_about") {
    oracle::Rng rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const Vec3 axis = rng.unit_vec3();
        const double angle = rng.range(1e-4, kPi - 1e-4);
        const Rotation3 r = axis_angle_from_rotation(rotation_about(axis, angle));
        CHECK(r.angle == doctest::Approx(angle).epsilon(1e-10));
        CHECK(norm(r.axis - axis) < 1e-9);
        const LorentzMatrix rebuilt = rotation_about(r.axis, r.angle);
        CHECK(max_entry_diff(rebuilt, rotation_about(axis, angle)) < 1e-10);
    }
}

TEST_CASE("LorentzMatrix::inverse matches the metric inverse") {
    oracle::Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const LorentzMatrix lam = random_proper_lorentz(rng);
        CHECK(max_entry_diff(lam * lam.inverse(), LorentzMatrix::identity()) < 1e-12);
        CHECK(max_entry_diff(lam.inverse() * lam, LorentzMatrix::identity()) < 1e-12);
    }
}
