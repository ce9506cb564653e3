// wignerbell: relativistic two-qubit Bell-state toolkit.
//
// Subcommands: wigner-angle, transform, chsh-sweep, lhv-sim, algebra-check,
// bell-demo. Exit codes: 0 success, 1 check/runtime failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rqi/bell.hpp"
#include "rqi/entanglement.hpp"
#include "rqi/lhv.hpp"
#include "rqi/little_group.hpp"
#include "rqi/poincare.hpp"
#include "rqi/states.hpp"
#include "rqi/sweep.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_speed(double beta, const char* name) {
    if (!(beta >= 0.0) || beta >= 1.0) {
        throw std::invalid_argument(std::string(name) + ": velocity must be < 1 (and >= 0)");
    }
}

std::string fmt(double v, int prec = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

std::string fmt_vec(const rqi::Vec3& v, int prec = 6) {
    return "(" + fmt(v.x, prec) + ", " + fmt(v.y, prec) + ", " + fmt(v.z, prec) + ")";
}

std::string fmt_amp(const rqi::Complex& c) {
    return "(" + fmt(c.real(), 9) + (c.imag() < 0 ? " - " : " + ") + fmt(std::abs(c.imag()), 9) +
           "i)";
}

int cmd_wigner_angle(double beta, double beta_prime) {
    require_speed(beta, "beta");
    require_speed(beta_prime, "beta-prime");
    const double closed = rqi::wigner_angle_perpendicular(beta, beta_prime);

    const rqi::FourMomentum p = rqi::FourMomentum::from_beta(1.0, beta, rqi::unit_z());
    const rqi::WignerRotation w =
        rqi::wigner_rotation(rqi::boost_along(rqi::unit_x(), beta_prime), p);
    const double oracle = w.angle_about(rqi::unit_y());

    std::cout << "closed-form theta_W  : " << fmt(closed) << " rad\n";
    std::cout << "matrix-oracle theta_W: " << fmt(oracle) << " rad (signed about +y)\n";
    std::cout << "rotation axis        : " << fmt_vec(w.axis()) << ", angle " << fmt(w.angle())
              << "\n";
    std::cout << "difference           : " << std::abs(closed - oracle) << "\n";
    return 0;
}

int cmd_transform(const std::string& kind_name, double beta, double beta_prime) {
    const rqi::BellKind kind = rqi::parse_bell_kind(kind_name);
    require_speed(beta, "beta");
    require_speed(beta_prime, "beta-prime");

    const rqi::BipartiteState initial = rqi::bell_state(kind, beta, 1.0);
    const rqi::BipartiteState boosted =
        rqi::boost_state(initial, rqi::boost_along(rqi::unit_x(), beta_prime));
    const double theta_w = rqi::wigner_angle_perpendicular(beta, beta_prime);
    const rqi::Amplitudes closed = rqi::transform_bell_closed_form(kind, theta_w);

    std::cout << "state " << rqi::to_string(kind) << ", beta = " << fmt(beta, 6)
              << ", frame boost beta' = " << fmt(beta_prime, 6) << " along +x\n";
    std::cout << "wigner angle       : " << fmt(theta_w) << " rad\n";
    std::cout << "momentum p1        : " << fmt_vec(initial.label1().momentum.momentum()) << " -> "
              << fmt_vec(boosted.label1().momentum.momentum()) << "\n";
    std::cout << "momentum p2        : " << fmt_vec(initial.label2().momentum.momentum()) << " -> "
              << fmt_vec(boosted.label2().momentum.momentum()) << "\n";
    std::cout << "kinematic factor   : " << fmt(boosted.kinematic_factor()) << "\n";
    std::cout << "amplitudes {uu, ud, du, dd}:\n";
    double max_diff = 0.0;
    for (int i = 0; i < 4; ++i) {
        max_diff = std::max(max_diff, std::abs(boosted.amplitudes()[i] - closed[i]));
        std::cout << "  boost_state " << fmt_amp(boosted.amplitudes()[i]) << "   closed-form "
                  << fmt_amp(closed[i]) << "\n";
    }
    std::cout << "path difference    : " << max_diff << "\n";
    std::cout << "entropy before/after: " << fmt(rqi::von_neumann_entropy(initial)) << " -> "
              << fmt(rqi::von_neumann_entropy(boosted)) << "\n";
    return 0;
}

int cmd_chsh_sweep(const rqi::SweepConfig& config, const std::string& output_path) {
    const std::vector<rqi::CsvRow> rows = rqi::run_chsh_sweep(config);
    if (output_path.empty()) {
        rqi::write_csv(std::cout, rows, config.precision);
        return 0;
    }
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot open '" << output_path << "' for writing\n";
        return 1;
    }
    rqi::write_csv(out, rows, config.precision);
    if (!out.good()) {
        std::cerr << "error: write to '" << output_path << "' failed\n";
        return 1;
    }
    return 0;
}

int cmd_lhv_sim(double angle, std::uint64_t n, rqi::RngSeed seed) {
    const rqi::Direction a(0.0, 0.0, 1.0);
    const rqi::Direction b(std::sin(angle), 0.0, std::cos(angle));
    const rqi::McEstimate mc = rqi::lhv_singlet_mc(a, b, n, seed);
    std::cout << "angle              : " << fmt(angle, 6) << " rad\n";
    std::cout << "samples, seed      : " << n << ", " << seed << "\n";
    std::cout << "LHV MC estimate    : " << fmt(mc.estimate) << "\n";
    std::cout << "LHV exact -1+2t/pi : " << fmt(rqi::lhv_singlet_exact(angle)) << "\n";
    std::cout << "QM value -cos t    : " << fmt(-std::cos(angle)) << "\n";
    std::cout << "standard error     : " << fmt(mc.std_error) << "\n";
    return 0;
}

int cmd_algebra_check() {
    const rqi::AlgebraReport report = rqi::verify_algebra();
    constexpr double tol = 1e-12;
    bool all_ok = true;
    for (const auto& rel : report.relations) {
        const bool ok = rel.max_deviation <= tol;
        all_ok = all_ok && ok;
        std::printf("%-6s max deviation %.3e  %s\n", rel.name.c_str(), rel.max_deviation,
                    ok ? "pass" : "FAIL");
    }
    std::cout << (all_ok ? "algebra check passed" : "algebra check FAILED") << " (tol 1e-12)\n";
    return all_ok ? 0 : 1;
}

int cmd_bell_demo() {
    const rqi::BipartiteState singlet = rqi::bell_state(rqi::BellKind::PsiMinus, 0.0, 1.0);
    const rqi::ChshDirections d = rqi::singlet_max_directions();
    std::cout << "singlet with a=(0,0,1), a'=(1,0,0), b=(1,0,1)/sqrt2, b'=(1,0,-1)/sqrt2\n";
    std::cout << "C(a,b)   = " << fmt(rqi::correlation(singlet, d.a, d.b)) << "\n";
    std::cout << "C(a',b)  = " << fmt(rqi::correlation(singlet, d.a_prime, d.b)) << "\n";
    std::cout << "C(a',b') = " << fmt(rqi::correlation(singlet, d.a_prime, d.b_prime)) << "\n";
    std::cout << "C(a,b')  = " << fmt(rqi::correlation(singlet, d.a, d.b_prime)) << "\n";
    const rqi::TsirelsonCheck tc = rqi::tsirelson_check(singlet, d);
    std::cout << "CHSH     = " << fmt(tc.value) << "\n";
    std::cout << "2*sqrt(2)= " << fmt(2.0 * std::sqrt(2.0)) << "\n";
    std::cout << "tsirelson bound = " << fmt(tc.bound) << "\n";
    return std::abs(tc.value - 2.0 * std::sqrt(2.0)) < 1e-10 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relativistic two-qubit Bell-state toolkit"};
    app.require_subcommand(1);

    double beta = 0.0, beta_prime = 0.0, angle = kPi / 2.0;
    std::string kind, output_path;
    std::uint64_t samples = 1000000;
    rqi::RngSeed seed = 1;
    rqi::SweepConfig config;

    auto* wig = app.add_subcommand("wigner-angle", "Wigner angle: closed form vs matrix product");
    wig->add_option("beta", beta, "particle velocity (along +z)")->required();
    wig->add_option("beta-prime", beta_prime, "frame velocity (along +x)")->required();

    auto* tr = app.add_subcommand("transform", "Lorentz-transform a Bell state");
    tr->add_option("kind", kind, "Bell state: phi+ phi- psi+ psi-")->required();
    tr->add_option("beta", beta, "particle velocity (along +z)")->required();
    tr->add_option("beta-prime", beta_prime, "frame velocity (along +x)")->required();

    auto* sweep = app.add_subcommand("chsh-sweep", "CSV sweep of CHSH over the velocity grid");
    sweep->add_option("--beta-min", config.beta_min, "grid start for beta");
    sweep->add_option("--beta-max", config.beta_max, "grid end for beta");
    sweep->add_option("--beta-steps", config.beta_steps, "grid points for beta");
    sweep->add_option("--beta-prime-min", config.beta_prime_min, "grid start for beta'");
    sweep->add_option("--beta-prime-max", config.beta_prime_max, "grid end for beta'");
    sweep->add_option("--beta-prime-steps", config.beta_prime_steps, "grid points for beta'");
    sweep->add_option("--mass", config.mass, "particle mass (natural units)");
    sweep->add_option("--precision", config.precision, "decimal digits in the CSV");
    sweep->add_option("--output", output_path, "output path (default: stdout)");

    auto* lhv = app.add_subcommand("lhv-sim", "local-hidden-variable singlet Monte Carlo");
    lhv->add_option("angle", angle, "analyzer angle in radians, [0, pi]")->required();
    lhv->add_option("--samples", samples, "Monte Carlo sample count");
    lhv->add_option("--seed", seed, "RNG seed");

    app.add_subcommand("algebra-check", "verify the generator commutation relations");
    app.add_subcommand("bell-demo", "reproduce the maximal CHSH violation on the singlet");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("wigner-angle")) return cmd_wigner_angle(beta, beta_prime);
        if (app.got_subcommand("transform")) return cmd_transform(kind, beta, beta_prime);
        if (app.got_subcommand("chsh-sweep")) return cmd_chsh_sweep(config, output_path);
        if (app.got_subcommand("lhv-sim")) return cmd_lhv_sim(angle, samples, seed);
        if (app.got_subcommand("algebra-check")) return cmd_algebra_check();
        if (app.got_subcommand("bell-demo")) return cmd_bell_demo();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
