#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rqi/bell.hpp"

// Velocity-grid sweep over (beta, beta_prime) for the boosted singlet:
// the direct CHSH at the fixed sweep quadruple, the optimal CHSH, and the
// entanglement invariants, emitted as deterministic CSV (comma separator,
// '.' decimal point, fixed precision, header row of field names, beta as the
// outer ascending loop).

namespace rqi {

struct SweepConfig {
    double beta_min = 0.0;
    double beta_max = 0.99;
    int beta_steps = 20;
    double beta_prime_min = 0.0;
    double beta_prime_max = 0.99;
    int beta_prime_steps = 20;
    double mass = 1.0;
    int precision = 12;

    void validate() const;  // throws std::invalid_argument
};

struct CsvRow {
    double beta;
    double beta_prime;
    double wigner_angle_rad;
    double chsh_fixed;
    double chsh_optimal;
    double entropy;
    double schmidt_lambda1;
    double schmidt_lambda2;
};

/// Grid values for one axis: steps points from min to max inclusive
/// (a single step collapses to min).
std::vector<double> sweep_axis(double min, double max, int steps);

std::vector<CsvRow> run_chsh_sweep(const SweepConfig& config);

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows, int precision);

}  // namespace rqi
