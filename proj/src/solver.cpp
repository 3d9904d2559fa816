#include "bvpkit/solver.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

#include "bvpkit/norms.hpp"
#include "bvpkit/odeint.hpp"

namespace bvp {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Unique: return "unique";
        case SolveStatus::SolvableNonUnique: return "solvable_non_unique";
        case SolveStatus::NoSolution: return "no_solution";
    }
    return "?";
}

Trajectory equation_residual(const BVProblem& problem, const Trajectory& y) {
    const ProblemDims& d = problem.dims;
    if (y.max_order() < d.jet_order()) {
        throw NumericsError("insufficient jet: residual needs derivatives up to order n + r");
    }
    std::vector<std::vector<double>> binom(d.n + 1);
    for (int i = 0; i <= d.n; ++i) {
        binom[i].assign(i + 1, 1.0);
        for (int j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
    Trajectory res(y.grid(), y.rows(), y.cols(), d.n);
    for (int node = 0; node < y.grid().num_points(); ++node) {
        const double t = y.grid().point(node);
        for (int i = 0; i <= d.n; ++i) {
            Matrix val = y.value(d.r + i, node) - problem.rhs.eval(t, i);
            for (int k = 0; k < d.r; ++k) {
                for (int nu = 0; nu <= i; ++nu) {
                    val += binom[i][nu] *
                           (problem.coefficients[k].eval(t, nu) * y.value(k + i - nu, node));
                }
            }
            res.value_mut(i, node) = val;
        }
    }
    return res;
}

ResidualReport residual_check(const BVProblem& problem, const Trajectory& y) {
    ResidualReport report;
    report.ode_residual = sobolev_norm(equation_residual(problem, y), problem.dims.n, problem.dims.p);
    const Matrix by = apply_boundary_operator(problem.boundary, y);
    report.boundary_residual = (by.col(0) - problem.c).norm();
    return report;
}

SolveReport solve(const BVProblem& problem, const Grid& grid, const SolveOptions& options) {
    const ProblemDims& d = problem.dims;
    const int jet = d.jet_order();

    const std::vector<Trajectory> fundamentals =
        fundamental_solutions(problem.coefficients, grid, jet);

    SolveReport report;
    report.charmat =
        characteristic_from_solutions(problem.boundary, fundamentals, options.rank_tolerance);
    report.fredholm = fredholm_numbers(report.charmat, d);

    std::vector<Matrix> zero_jet(d.r, Matrix::Zero(d.m, 1));
    Trajectory particular = extend_derivatives(
        integrate(problem.coefficients, &problem.rhs, zero_jet, grid), problem.coefficients,
        &problem.rhs, jet);

    const Vector target = problem.c - apply_boundary_operator(problem.boundary, particular).col(0);

    // Minimum-norm least-squares coefficients through the SVD, consistent with
    // the rank decision recorded in the characteristic matrix.
    Eigen::JacobiSVD<Matrix> svd(report.charmat.data, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    Vector xi = Vector::Zero(report.charmat.data.cols());
    for (int i = 0; i < report.charmat.rank; ++i) {
        xi += (svd.matrixU().col(i).dot(target) / sigma(i)) * svd.matrixV().col(i);
    }

    report.consistency_residual = (report.charmat.data * xi - target).norm();
    report.consistency_tolerance = 1e-8 * (1.0 + problem.c.norm());

    for (int j = report.charmat.rank; j < static_cast<int>(report.charmat.data.cols()); ++j) {
        const Vector nu = svd.matrixV().col(j);
        Trajectory z = fundamentals[0].right_multiplied(nu.segment(0, d.m));
        for (int k = 1; k < d.r; ++k) {
            z.add_scaled(fundamentals[k].right_multiplied(nu.segment(k * d.m, d.m)), 1.0);
        }
        report.kernel_basis.push_back(std::move(z));
    }

    if (report.consistency_residual > report.consistency_tolerance) {
        report.status = SolveStatus::NoSolution;
        report.residuals.ode_residual = std::numeric_limits<double>::quiet_NaN();
        report.residuals.boundary_residual = std::numeric_limits<double>::quiet_NaN();
        return report;
    }

    Trajectory y = std::move(particular);
    for (int k = 0; k < d.r; ++k) {
        y.add_scaled(fundamentals[k].right_multiplied(xi.segment(k * d.m, d.m)), 1.0);
    }
    report.residuals = residual_check(problem, y);
    report.solution = std::move(y);
    report.status = report.fredholm.dim_ker == 0 ? SolveStatus::Unique
                                                 : SolveStatus::SolvableNonUnique;
    return report;
}

}  // namespace bvp
