#include "rqi/poincare.hpp"

#include <algorithm>
#include <cmath>

namespace rqi {

namespace {

constexpr double kEta[4] = {-1.0, 1.0, 1.0, 1.0};

double max_abs(const Mat5& m) {
    double r = 0.0;
    for (const auto& row : m) {
        for (double v : row) r = std::max(r, std::abs(v));
    }
    return r;
}

Mat5 scaled(const AffineGenerator& g, double s) {
    Mat5 r{};
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) r[i][j] = s * g.entries[i][j];
    }
    return r;
}

Mat5 diff(const Mat5& a, const Mat5& b) {
    Mat5 r{};
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) r[i][j] = a[i][j] - b[i][j];
    }
    return r;
}

constexpr double eps3(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    // parity of the permutation (i,j,k) of (0,1,2)
    return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

}  // namespace

AffineGenerator lorentz_generator(int mu, int nu) {
    AffineGenerator g;
    if (mu == nu) return g;
    // Real absorption of M^{mu nu}: block[a][b] = eta^{nu a} d^mu_b - eta^{mu a} d^nu_b.
    for (int a = 0; a < 4; ++a) {
        g.entries[a][mu] += kEta[nu] * (a == nu ? 1.0 : 0.0);
        g.entries[a][nu] -= kEta[mu] * (a == mu ? 1.0 : 0.0);
    }
    return g;
}

AffineGenerator translation_generator(int mu) {
    AffineGenerator g;
    g.entries[mu][4] = 1.0;
    return g;
}

AffineGenerator generator(GeneratorLabel label) {
    switch (label) {
        case GeneratorLabel::J1: return lorentz_generator(2, 3);
        case GeneratorLabel::J2: return lorentz_generator(3, 1);
        case GeneratorLabel::J3: return lorentz_generator(1, 2);
        case GeneratorLabel::K1: return lorentz_generator(1, 0);
        case GeneratorLabel::K2: return lorentz_generator(2, 0);
        case GeneratorLabel::K3: return lorentz_generator(3, 0);
        case GeneratorLabel::P0: return translation_generator(0);
        case GeneratorLabel::P1: return translation_generator(1);
        case GeneratorLabel::P2: return translation_generator(2);
        case GeneratorLabel::P3: return translation_generator(3);
    }
    throw std::invalid_argument("generator: unknown label");
}

Mat5 commutator(const AffineGenerator& a, const AffineGenerator& b) {
    Mat5 r{};
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            double s = 0.0;
            for (int k = 0; k < 5; ++k) {
                s += a.entries[i][k] * b.entries[k][j] - b.entries[i][k] * a.entries[k][j];
            }
            r[i][j] = s;
        }
    }
    return r;
}

GeneratorSet GeneratorSet::canonical() {
    GeneratorSet g;
    g.j = {generator(GeneratorLabel::J1), generator(GeneratorLabel::J2),
           generator(GeneratorLabel::J3)};
    g.k = {generator(GeneratorLabel::K1), generator(GeneratorLabel::K2),
           generator(GeneratorLabel::K3)};
    g.p = {generator(GeneratorLabel::P0), generator(GeneratorLabel::P1),
           generator(GeneratorLabel::P2), generator(GeneratorLabel::P3)};
    return g;
}

double AlgebraReport::max_deviation() const {
    double r = 0.0;
    for (const auto& rel : relations) r = std::max(r, rel.max_deviation);
    return r;
}

AlgebraReport verify_algebra(const GeneratorSet& g) {
    AlgebraReport report;
    const auto& h = g.p[0];

    auto check = [](const AffineGenerator& a, const AffineGenerator& b, const Mat5& expect) {
        return max_abs(diff(commutator(a, b), expect));
    };
    auto combo = [](const std::array<AffineGenerator, 3>& basis, int i, int j, double sign) {
        Mat5 r{};
        for (int k = 0; k < 3; ++k) {
            const double f = sign * eps3(i, j, k);
            if (f == 0.0) continue;
            const Mat5 t = scaled(basis[k], f);
            for (int a = 0; a < 5; ++a) {
                for (int b = 0; b < 5; ++b) r[a][b] += t[a][b];
            }
        }
        return r;
    };

    RelationCheck jp{"[J,P]", 0.0}, jj{"[J,J]", 0.0}, jk{"[J,K]", 0.0}, pp{"[P,P]", 0.0},
        jh{"[J,H]", 0.0}, ph{"[P,H]", 0.0}, kk{"[K,K]", 0.0}, kp{"[K,P]", 0.0}, kh{"[K,H]", 0.0};

    const std::array<AffineGenerator, 3> pvec = {g.p[1], g.p[2], g.p[3]};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            jp.max_deviation = std::max(jp.max_deviation, check(g.j[i], pvec[j], combo(pvec, i, j, 1.0)));
            jj.max_deviation = std::max(jj.max_deviation, check(g.j[i], g.j[j], combo(g.j, i, j, 1.0)));
            jk.max_deviation = std::max(jk.max_deviation, check(g.j[i], g.k[j], combo(g.k, i, j, 1.0)));
            pp.max_deviation = std::max(pp.max_deviation, max_abs(commutator(pvec[i], pvec[j])));
            kk.max_deviation = std::max(kk.max_deviation, check(g.k[i], g.k[j], combo(g.j, i, j, -1.0)));
            kp.max_deviation = std::max(
                kp.max_deviation, check(g.k[i], pvec[j], scaled(h, i == j ? -1.0 : 0.0)));
        }
        jh.max_deviation = std::max(jh.max_deviation, max_abs(commutator(g.j[i], h)));
        ph.max_deviation = std::max(ph.max_deviation, max_abs(commutator(pvec[i], h)));
        kh.max_deviation = std::max(kh.max_deviation, check(g.k[i], h, scaled(pvec[i], -1.0)));
    }

    report.relations = {jp, jj, jk, pp, jh, ph, kk, kp, kh};
    return report;
}

AlgebraReport verify_algebra() { return verify_algebra(GeneratorSet::canonical()); }

Vec3 pauli_lubanski_rest(const FourMomentum& p, const FourVector& w, double tol) {
    const FourVector pv = p.four_vector();
    const double residual = minkowski_dot(w, pv);
    // Transversality is scale-relative: compare against the term magnitudes.
    const double scale = 1.0 + std::abs(w.t) * pv.t + norm(w.spatial()) * norm(pv.spatial());
    if (std::abs(residual) > tol * scale) {
        throw TransversalityError("pauli_lubanski_rest: W not transverse to p (residual " +
                                  std::to_string(residual) + ")");
    }
    const double m = p.mass();
    const double e = p.energy();
    const Vec3 mom = p.momentum();
    return w.spatial() / m - mom * (w.t / (m * (m + e)));
}

}  // namespace rqi
