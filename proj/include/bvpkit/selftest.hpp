#pragma once

#include <iosfwd>
#include <random>
#include <string>

#include "bvpkit/types.hpp"

namespace bvp {

/// Outcome of one built-in oracle suite.
struct OracleCheck {
    std::string name;
    bool pass = false;
    double worst = 0.0;    // worst observed measure across the suite's cases
    double bound = 0.0;    // acceptance bound on that measure
    double elapsed_seconds = 0.0;
    std::string detail;
};

/// Complex scalar drawn uniformly from the closed unit disc.
Complex random_unit_disc(std::mt19937_64& rng);

/// Matrix with independent unit-disc entries.
Matrix random_unit_disc_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols);

/// First-order constant-coefficient problems whose boundary operator reads the
/// solution jet at the left endpoint: the characteristic matrix must match a
/// pure matrix-power closed form. 20 random cases, relative Frobenius error
/// within 1e-6 on a 2000-step grid, under a five-second budget.
OracleCheck one_point_oracle();

/// Second-order problems y'' + A y' = 0 with two-point boundary conditions:
/// the characteristic matrix must match the exponential closed form, both in
/// the canonical normalized-jet basis and, through the constant change of
/// fundamental basis {I, exp(-A(t-a))}, in the power-series display form.
OracleCheck two_point_oracle();

/// Multipoint conditions on y' = 0: the characteristic matrix collapses to
/// the sum of the order-zero point weights (within 1e-10), and the Fredholm
/// numbers follow the rank exactly, including a constructed rank-deficient
/// case.
OracleCheck multipoint_oracle();

/// Runs all three oracle suites, printing one line each; true when all pass.
bool run_selftest(std::ostream& os);

}  // namespace bvp
