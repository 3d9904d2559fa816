#include "bvpkit/problem.hpp"

#include <cmath>

namespace bvp {

namespace {

void check_descriptor_domain(const MatrixFunction& f, const Interval& iv, const std::string& name,
                             std::vector<std::string>& out) {
    if (f.kind() == MatrixFunction::Kind::Sampled &&
        (f.sample_min() > iv.a || f.sample_max() < iv.b)) {
        out.push_back(name + ": sampled points do not cover the interval");
    }
}

}  // namespace

ValidationReport validate(const BVProblem& problem) {
    ValidationReport report;
    auto flag = [&report](const std::string& msg) { report.violations.push_back(msg); };

    const ProblemDims& d = problem.dims;
    if (d.m < 1) flag("dims.m must be positive");
    if (d.r < 1) flag("dims.r must be positive");
    if (d.n < 0) flag("dims.n must be nonnegative");
    if (d.l < 1) flag("dims.l must be positive");
    if (!(problem.interval.a < problem.interval.b) || !std::isfinite(problem.interval.a) ||
        !std::isfinite(problem.interval.b)) {
        flag("interval must be finite with a < b");
    }
    if (d.m < 1 || d.r < 1 || d.n < 0 || d.l < 1) return report;

    if (static_cast<int>(problem.coefficients.size()) != d.r) {
        flag("coefficient count: expected " + std::to_string(d.r) + " matrices A_0..A_" +
             std::to_string(d.r - 1));
    }
    for (std::size_t k = 0; k < problem.coefficients.size(); ++k) {
        const MatrixFunction& A = problem.coefficients[k];
        const std::string name = "coefficient A_" + std::to_string(k);
        if (A.rows() != d.m || A.cols() != d.m) flag(name + " shape: expected m x m");
        if (A.max_derivative_order() < d.n) {
            flag(name + ": cannot supply derivatives up to order n = " + std::to_string(d.n));
        }
        check_descriptor_domain(A, problem.interval, name, report.violations);
    }

    if (problem.rhs.rows() != d.m || problem.rhs.cols() != 1) {
        flag("rhs shape: expected m x 1");
    }
    if (problem.rhs.max_derivative_order() < d.n) {
        flag("rhs: cannot supply derivatives up to order n = " + std::to_string(d.n));
    }
    check_descriptor_domain(problem.rhs, problem.interval, "rhs", report.violations);

    if (problem.boundary.jet_order() != d.jet_order()) {
        flag("boundary operator jet count: expected n + r = " + std::to_string(d.jet_order()) +
             " matrices");
    }
    for (std::size_t k = 0; k < problem.boundary.alphas.size(); ++k) {
        const Matrix& a = problem.boundary.alphas[k];
        if (a.rows() != d.l || a.cols() != d.m) {
            flag("boundary alpha_" + std::to_string(k) + " shape: expected l x m");
        }
    }
    if (problem.boundary.phi) {
        if (problem.boundary.phi->rows() != d.l || problem.boundary.phi->cols() != d.m) {
            flag("boundary kernel shape: expected l x m");
        }
        check_descriptor_domain(*problem.boundary.phi, problem.interval, "boundary kernel",
                                report.violations);
    }

    if (problem.c.size() != d.l) flag("boundary value c length: expected l");
    return report;
}

}  // namespace bvp
