#pragma once

#include <optional>
#include <vector>

#include "bvpkit/charmat.hpp"
#include "bvpkit/problem.hpp"

namespace bvp {

enum class SolveStatus { Unique, SolvableNonUnique, NoSolution };

std::string to_string(SolveStatus s);

struct SolveOptions {
    double tol_solve = 1e-6;               // residual acceptance bound
    std::optional<double> rank_tolerance;  // absolute SVD threshold override
};

struct ResidualReport {
    double ode_residual = 0.0;       // Sobolev norm of Ly - f at order n
    double boundary_residual = 0.0;  // Euclidean norm of By - c
};

struct SolveReport {
    SolveStatus status = SolveStatus::NoSolution;
    std::optional<Trajectory> solution;    // minimum-norm representative
    std::vector<Trajectory> kernel_basis;  // dim_ker homogeneous solutions
    CharacteristicMatrix charmat;
    FredholmNumbers fredholm;
    ResidualReport residuals;          // of the reported solution (NaN if none)
    double consistency_residual = 0.0; // least-squares defect of the shooting system
    double consistency_tolerance = 0.0;
};

/// Shooting solve: particular trajectory with zero initial jet plus a
/// combination of fundamental solutions chosen through the characteristic
/// matrix. The combination solves M xi = c - B y_part in the least-squares
/// sense; a defect above 1e-8 * (1 + |c|) means no solution, otherwise the
/// kernel dimension decides unique versus non-unique and the minimum-norm
/// representative is reported together with a kernel basis.
SolveReport solve(const BVProblem& problem, const Grid& grid, const SolveOptions& options = {});

/// Residuals of a candidate trajectory against the problem. The candidate
/// must carry n + r derivative orders; Ly - f and its first n derivatives are
/// formed from the stored samples and the equation's coefficient derivatives.
ResidualReport residual_check(const BVProblem& problem, const Trajectory& y);

/// Trajectory of Ly - f carrying derivative orders 0 .. n; the building block
/// of residual and discrepancy measurements.
Trajectory equation_residual(const BVProblem& problem, const Trajectory& y);

}  // namespace bvp
