#include "rqi/sweep.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rqi/entanglement.hpp"
#include "rqi/little_group.hpp"

namespace rqi {

void SweepConfig::validate() const {
    auto check_axis = [](double min, double max, int steps, const char* name) {
        if (!(min >= 0.0 && min <= max && max < 1.0)) {
            throw std::invalid_argument(std::string(name) + ": need 0 <= min <= max < 1");
        }
        if (steps < 1) {
            throw std::invalid_argument(std::string(name) + ": steps must be >= 1");
        }
    };
    check_axis(beta_min, beta_max, beta_steps, "beta axis");
    check_axis(beta_prime_min, beta_prime_max, beta_prime_steps, "beta-prime axis");
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    if (precision < 1 || precision > 17) {
        throw std::invalid_argument("precision must lie in [1, 17]");
    }
}

std::vector<double> sweep_axis(double min, double max, int steps) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        v.push_back(min);
        return v;
    }
    for (int i = 0; i < steps; ++i) {
        v.push_back(min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return v;
}

std::vector<CsvRow> run_chsh_sweep(const SweepConfig& config) {
    config.validate();
    const ChshDirections fixed = sweep_directions();
    std::vector<CsvRow> rows;
    rows.reserve(static_cast<std::size_t>(config.beta_steps) *
                 static_cast<std::size_t>(config.beta_prime_steps));
    for (double beta : sweep_axis(config.beta_min, config.beta_max, config.beta_steps)) {
        const BipartiteState singlet = bell_state(BellKind::PsiMinus, beta, config.mass);
        for (double bp : sweep_axis(config.beta_prime_min, config.beta_prime_max,
                                    config.beta_prime_steps)) {
            const BipartiteState boosted = boost_state(singlet, boost_along(unit_x(), bp));
            const SchmidtDecomposition sd = schmidt(boosted);
            rows.push_back(CsvRow{beta, bp, wigner_angle_perpendicular(beta, bp),
                                  chsh(boosted, fixed), optimal_chsh(boosted).value,
                                  von_neumann_entropy(boosted), sd.coefficients[0],
                                  sd.coefficients[1]});
        }
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows, int precision) {
    out << "beta,beta_prime,wigner_angle_rad,chsh_fixed,chsh_optimal,entropy,"
           "schmidt_lambda1,schmidt_lambda2\n";
    char buf[64];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof(buf), "%.*f%c", precision, v, sep);
        out << buf;
    };
    for (const CsvRow& r : rows) {
        put(r.beta, ',');
        put(r.beta_prime, ',');
        put(r.wigner_angle_rad, ',');
        put(r.chsh_fixed, ',');
        put(r.chsh_optimal, ',');
        put(r.entropy, ',');
        put(r.schmidt_lambda1, ',');
        put(r.schmidt_lambda2, '\n');
    }
}

}  // namespace rqi
