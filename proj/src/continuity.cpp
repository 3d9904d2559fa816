#include "bvpkit/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bvpkit/norms.hpp"
#include "bvpkit/odeint.hpp"

namespace bvp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_square(const BVProblem& base) {
    if (base.dims.l != base.dims.m * base.dims.r) {
        throw SchemaError("continuity studies require l = m r (square characteristic matrix)");
    }
}

void require_schedule(const std::vector<double>& schedule) {
    if (schedule.empty()) throw SchemaError("family schedule is empty");
    for (double eps : schedule) {
        if (!(eps > 0.0) || !std::isfinite(eps)) {
            throw SchemaError("family schedule entries must be positive and finite");
        }
    }
}

/// Shrinking-trend test: everything below the noise floor passes; otherwise
/// the sequence must be non-increasing up to slack and end well below start.
bool trends_to_zero(const std::vector<double>& d, double noise) {
    const double peak = *std::max_element(d.begin(), d.end());
    if (peak <= noise) return true;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (d[i] > d[i - 1] * 1.05 + noise) return false;
    }
    return d.back() <= std::max(0.5 * d.front(), noise);
}

}  // namespace

BVProblem ProblemFamily::problem_at(double eps) const {
    if (generator) return generator(eps);
    BVProblem p = base;
    if (!coefficient_deltas.empty()) {
        for (std::size_t k = 0; k < p.coefficients.size() && k < coefficient_deltas.size(); ++k) {
            if (coefficient_deltas[k]) {
                p.coefficients[k] =
                    MatrixFunction::combination(1.0, p.coefficients[k], eps, *coefficient_deltas[k]);
            }
        }
    }
    if (!alpha_deltas.empty()) {
        for (std::size_t k = 0; k < p.boundary.alphas.size() && k < alpha_deltas.size(); ++k) {
            p.boundary.alphas[k] += eps * alpha_deltas[k];
        }
    }
    if (phi_delta) {
        MatrixFunction base_phi = p.boundary.phi
                                      ? *p.boundary.phi
                                      : MatrixFunction::zero(phi_delta->rows(), phi_delta->cols());
        p.boundary.phi = MatrixFunction::combination(1.0, std::move(base_phi), eps, *phi_delta);
    }
    if (rhs_delta) p.rhs = MatrixFunction::combination(1.0, p.rhs, eps, *rhs_delta);
    if (c_delta.size() > 0) p.c += eps * c_delta;
    return p;
}

ConditionVerdicts check_conditions(const ProblemFamily& family, const Grid& grid,
                                   const ContinuityOptions& options) {
    require_square(family.base);
    require_schedule(family.schedule);
    const ProblemDims& d = family.base.dims;
    ConditionVerdicts v;

    const CharacteristicMatrix m0 =
        characteristic_matrix(family.base, grid, options.solve.rank_tolerance);
    v.invertible_base = is_invertible(m0, d);

    // (I): Sobolev distance of each coefficient from its base version.
    v.coefficient_distances.assign(d.r, {});
    bool coeffs_ok = true;
    for (int k = 0; k < d.r; ++k) {
        std::vector<double>& dist = v.coefficient_distances[k];
        for (double eps : family.schedule) {
            const BVProblem p = family.problem_at(eps);
            const MatrixFunction delta =
                MatrixFunction::combination(1.0, p.coefficients[k], -1.0, family.base.coefficients[k]);
            dist.push_back(sobolev_norm(Trajectory::from_function(delta, grid, d.n), d.n, d.p));
        }
        coeffs_ok = coeffs_ok && trends_to_zero(dist, options.noise_floor);
    }
    v.coefficients_converge = coeffs_ok;

    // (II): boundary images of monomial probes t^q e_i, q = 0 .. n+r.
    std::vector<Trajectory> probes;
    for (int q = 0; q <= d.jet_order(); ++q) {
        for (int i = 0; i < d.m; ++i) {
            std::vector<Matrix> coeffs(q + 1, Matrix::Zero(d.m, 1));
            coeffs[q](i, 0) = 1.0;
            probes.push_back(
                Trajectory::from_function(MatrixFunction::polynomial(coeffs), grid, d.jet_order()));
        }
    }
    for (double eps : family.schedule) {
        const BVProblem p = family.problem_at(eps);
        double worst = 0.0;
        for (const Trajectory& probe : probes) {
            const Matrix diff = apply_boundary_operator(p.boundary, probe) -
                                apply_boundary_operator(family.base.boundary, probe);
            worst = std::max(worst, diff.norm());
        }
        v.boundary_distances.push_back(worst);
    }
    v.boundary_converges = trends_to_zero(v.boundary_distances, options.noise_floor);
    return v;
}

double discrepancy(const BVProblem& problem, const Trajectory& y) {
    const double ode = sobolev_norm(equation_residual(problem, y), problem.dims.n, problem.dims.p);
    const Matrix by = apply_boundary_operator(problem.boundary, y);
    return ode + (by.col(0) - problem.c).norm();
}

ContinuityReport run_family(const ProblemFamily& family, const Grid& grid,
                            const ContinuityOptions& options) {
    require_square(family.base);
    require_schedule(family.schedule);
    const ProblemDims& d = family.base.dims;

    ContinuityReport report;
    report.verdicts = check_conditions(family, grid, options);

    const SolveReport base = solve(family.base, grid, options.solve);
    report.base_status = base.status;
    report.base_fredholm = base.fredholm;
    const Matrix& m0 = base.charmat.data;

    double g1 = std::numeric_limits<double>::infinity();
    double g2 = 0.0;
    bool any_ratio = false;
    for (double eps : family.schedule) {
        const BVProblem p = family.problem_at(eps);
        ContinuityEntry entry;
        entry.eps = eps;

        const SolveReport sr = solve(p, grid, options.solve);
        entry.matrix_distance = (sr.charmat.data - m0).norm();
        entry.fredholm = sr.fredholm;
        entry.status = sr.status;
        entry.error = kNaN;
        entry.discrepancy = kNaN;
        entry.ratio = kNaN;
        if (base.solution) {
            entry.discrepancy = discrepancy(p, *base.solution);
            if (sr.solution) {
                entry.error =
                    sobolev_norm(difference(*base.solution, *sr.solution), d.jet_order(), d.p);
                if (entry.error > options.noise_floor && entry.discrepancy > options.noise_floor) {
                    entry.ratio = entry.error / entry.discrepancy;
                    g1 = std::min(g1, entry.ratio);
                    g2 = std::max(g2, entry.ratio);
                    any_ratio = true;
                }
            }
        }
        report.entries.push_back(std::move(entry));
    }
    report.gamma1 = any_ratio ? g1 : kNaN;
    report.gamma2 = any_ratio ? g2 : kNaN;
    return report;
}

TwoSidedCheck two_sided_estimate_check(const ContinuityReport& report,
                                       const ContinuityOptions& options) {
    std::vector<double> ratios;
    for (const ContinuityEntry& e : report.entries) {
        if (std::isfinite(e.ratio)) ratios.push_back(e.ratio);
    }
    if (ratios.size() < 3) {
        throw NumericsError("degenerate family: fewer than three usable error/discrepancy ratios");
    }
    TwoSidedCheck check;
    check.gamma1 = *std::min_element(ratios.begin(), ratios.end());
    check.gamma2 = *std::max_element(ratios.begin(), ratios.end());

    const std::size_t tail_start = ratios.size() / 2;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = tail_start; i < ratios.size(); ++i) {
        lo = std::min(lo, ratios[i]);
        hi = std::max(hi, ratios[i]);
    }
    check.tail_spread = hi / lo;
    check.pass = check.gamma1 > 0.0 && std::isfinite(check.gamma2) &&
                 check.tail_spread <= options.spread_bound;
    return check;
}

std::vector<std::pair<double, bool>> semicontinuity_check(const ContinuityReport& report) {
    std::vector<std::pair<double, bool>> out;
    const std::size_t tail_start = report.entries.size() / 2;
    for (std::size_t i = tail_start; i < report.entries.size(); ++i) {
        const ContinuityEntry& e = report.entries[i];
        out.emplace_back(e.eps, e.fredholm.dim_ker <= report.base_fredholm.dim_ker &&
                                    e.fredholm.dim_coker <= report.base_fredholm.dim_coker);
    }
    return out;
}

}  // namespace bvp
