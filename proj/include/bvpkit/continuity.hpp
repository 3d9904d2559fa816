#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bvpkit/problem.hpp"
#include "bvpkit/solver.hpp"

namespace bvp {

/// One-parameter family of problems. In linear mode every ingredient moves as
/// X(eps) = X(0) + eps * DX with absent perturbations meaning zero; a custom
/// generator replaces the linear law entirely.
struct ProblemFamily {
    BVProblem base;
    // Linear-mode perturbations; empty containers mean unperturbed.
    std::vector<std::optional<MatrixFunction>> coefficient_deltas;  // size r or empty
    std::vector<Matrix> alpha_deltas;                               // size n+r or empty
    std::optional<MatrixFunction> phi_delta;
    std::optional<MatrixFunction> rhs_delta;
    Vector c_delta;  // size l or 0
    std::vector<double> schedule;
    std::function<BVProblem(double)> generator;  // optional custom dependence law

    BVProblem problem_at(double eps) const;
};

struct ContinuityOptions {
    double noise_floor = 1e-8;  // below this, errors and discrepancies are noise
    double spread_bound = 2.0;  // accepted max/min ratio spread over the tail
    SolveOptions solve;
};

/// Convergence verdicts for the three perturbation-smallness conditions:
/// (0) the unperturbed characteristic matrix is nondegenerate (square case),
/// (I) coefficient distances shrink along the schedule,
/// (II) boundary images of a fixed polynomial probe basis converge.
struct ConditionVerdicts {
    bool invertible_base = false;
    bool coefficients_converge = false;
    bool boundary_converges = false;
    std::vector<std::vector<double>> coefficient_distances;  // [order][schedule index]
    std::vector<double> boundary_distances;                  // max over probes, per schedule index
};

struct ContinuityEntry {
    double eps = 0.0;
    double matrix_distance = 0.0;  // Frobenius distance of characteristic matrices
    FredholmNumbers fredholm;
    SolveStatus status = SolveStatus::NoSolution;
    double error = 0.0;        // Sobolev distance of solutions, order n + r
    double discrepancy = 0.0;  // residual of the base solution in the perturbed problem
    double ratio = 0.0;        // error / discrepancy where both are above noise
};

struct ContinuityReport {
    ConditionVerdicts verdicts;
    SolveStatus base_status = SolveStatus::NoSolution;
    FredholmNumbers base_fredholm;
    std::vector<ContinuityEntry> entries;
    double gamma1 = 0.0;  // min valid ratio
    double gamma2 = 0.0;  // max valid ratio
};

/// Verifies conditions (0), (I), (II) along the schedule. Requires l = m r.
ConditionVerdicts check_conditions(const ProblemFamily& family, const Grid& grid,
                                   const ContinuityOptions& options = {});

/// Solves the base problem once, then for every scheduled eps assembles the
/// perturbed characteristic matrix, solves, and measures solution error and
/// discrepancy against the reused base solution. Requires l = m r; entries
/// whose problems are unsolvable are recorded with their status.
ContinuityReport run_family(const ProblemFamily& family, const Grid& grid,
                            const ContinuityOptions& options = {});

/// Residual of a candidate trajectory in a problem: Sobolev norm of Ly - f at
/// order n plus the Euclidean boundary defect |By - c|.
double discrepancy(const BVProblem& problem, const Trajectory& y);

struct TwoSidedCheck {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double tail_spread = 0.0;  // max/min ratio over the schedule tail
    bool pass = false;
};

/// Empirical two-sided bound between error and discrepancy: positive finite
/// ratios whose spread over the last half of the schedule stays within the
/// declared bound. Throws NumericsError for degenerate families with fewer
/// than three usable entries.
TwoSidedCheck two_sided_estimate_check(const ContinuityReport& report,
                                       const ContinuityOptions& options = {});

/// Kernel and cokernel dimensions over the schedule tail never exceed the
/// base dimensions. Returns per-entry verdicts for the tail.
std::vector<std::pair<double, bool>> semicontinuity_check(const ContinuityReport& report);

}  // namespace bvp
