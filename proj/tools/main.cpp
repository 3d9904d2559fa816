#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bvpkit/continuity.hpp"
#include "bvpkit/io.hpp"
#include "bvpkit/selftest.hpp"
#include "bvpkit/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct RunConfig {
    std::string input;
    int grid_steps = 2000;
    std::optional<double> rank_tol;
    double tol_solve = 1e-6;
    std::optional<std::string> out;
    std::optional<std::string> p_override;
};

bvp::Lp parse_p_flag(const std::string& s) {
    if (s == "1") return bvp::Lp::One;
    if (s == "2") return bvp::Lp::Two;
    if (s == "inf") return bvp::Lp::Inf;
    throw bvp::SchemaError("--p expects 1, 2, or inf");
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, bool needs_input) {
    if (needs_input) {
        cmd->add_option("input", cfg.input, "problem or family JSON file")->required();
    }
    cmd->add_option("--grid", cfg.grid_steps, "grid step count (even, >= 10)")
        ->check(CLI::Range(10, 10000000));
    cmd->add_option("--rank-tol", cfg.rank_tol, "absolute singular value threshold")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-solve", cfg.tol_solve, "residual acceptance bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg.out, "write the CSV report to this path");
    cmd->add_option("--p", cfg.p_override, "override the norm exponent: 1, 2, or inf")
        ->check(CLI::IsMember({"1", "2", "inf"}));
}

bvp::Grid make_grid(const bvp::Interval& interval, const RunConfig& cfg) {
    if (cfg.grid_steps % 2 != 0 || cfg.grid_steps < 10) {
        throw bvp::SchemaError("--grid must be an even integer of at least 10");
    }
    return bvp::Grid(interval, cfg.grid_steps);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw bvp::SchemaError(path + ": cannot open for writing");
    return os;
}

void print_singular_values(const bvp::CharacteristicMatrix& M) {
    std::cout << "singular values:";
    for (Eigen::Index i = 0; i < M.singular_values.size(); ++i) {
        std::cout << " " << bvp::format_sci(M.singular_values(i));
    }
    std::cout << "\nrank tolerance: " << bvp::format_sci(M.rank_tolerance) << "\n";
}

void print_matrix(const bvp::Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            const bvp::Complex v = m(i, k);
            std::cout << (k == 0 ? "" : ", ") << v.real()
                      << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
        }
        std::cout << "]\n";
    }
}

int run_analyze(const RunConfig& cfg) {
    bvp::BVProblem problem = bvp::load_problem(cfg.input);
    if (cfg.p_override) problem.dims.p = parse_p_flag(*cfg.p_override);
    const bvp::Grid grid = make_grid(problem.interval, cfg);

    const bvp::CharacteristicMatrix M = bvp::characteristic_matrix(problem, grid, cfg.rank_tol);
    const bvp::FredholmNumbers fred = bvp::fredholm_numbers(M, problem.dims);

    std::cout << "grid: N=" << grid.num_steps() << "\n";
    std::cout << "characteristic matrix: " << M.data.rows() << " x " << M.data.cols() << "\n";
    print_matrix(M.data);
    print_singular_values(M);
    std::cout << "rank: " << M.rank << "\n";
    std::cout << "index: " << fred.index << "\n";
    std::cout << "dim ker: " << fred.dim_ker << "\n";
    std::cout << "dim coker: " << fred.dim_coker << "\n";
    std::cout << "invertible: " << (bvp::is_invertible(M, problem.dims) ? "yes" : "no") << "\n";

    if (cfg.out) {
        auto os = open_out(*cfg.out);
        bvp::write_matrix_csv(os, M.data);
    }
    return kExitOk;
}

int run_solve(const RunConfig& cfg) {
    bvp::BVProblem problem = bvp::load_problem(cfg.input);
    if (cfg.p_override) problem.dims.p = parse_p_flag(*cfg.p_override);
    const bvp::Grid grid = make_grid(problem.interval, cfg);

    bvp::SolveOptions options;
    options.tol_solve = cfg.tol_solve;
    options.rank_tolerance = cfg.rank_tol;
    const bvp::SolveReport report = bvp::solve(problem, grid, options);

    std::cout << "grid: N=" << grid.num_steps() << "\n";
    std::cout << "status: " << bvp::to_string(report.status) << "\n";
    std::cout << "index: " << report.fredholm.index << " (dim ker " << report.fredholm.dim_ker
              << ", dim coker " << report.fredholm.dim_coker << ")\n";
    print_singular_values(report.charmat);
    std::cout << "consistency residual: " << bvp::format_sci(report.consistency_residual)
              << " (tolerance " << bvp::format_sci(report.consistency_tolerance) << ")\n";
    if (report.solution) {
        std::cout << "ode residual: " << bvp::format_sci(report.residuals.ode_residual) << "\n";
        std::cout << "boundary residual: " << bvp::format_sci(report.residuals.boundary_residual)
                  << "\n";
        std::cout << "kernel basis size: " << report.kernel_basis.size() << "\n";
        const bool within = report.residuals.ode_residual <= cfg.tol_solve &&
                            report.residuals.boundary_residual <= cfg.tol_solve;
        std::cout << "residuals within tol_solve: " << (within ? "yes" : "no") << "\n";
        if (cfg.out) {
            auto os = open_out(*cfg.out);
            bvp::write_trajectory_csv(os, *report.solution);
        }
        if (!within) return kExitNumerical;
    } else {
        std::cout << "no solution: least-squares defect above the consistency tolerance\n";
    }
    return kExitOk;
}

int run_continuity(const RunConfig& cfg) {
    bvp::ProblemFamily family = bvp::load_family(cfg.input);
    if (cfg.p_override) family.base.dims.p = parse_p_flag(*cfg.p_override);
    const bvp::Grid grid = make_grid(family.base.interval, cfg);

    bvp::ContinuityOptions options;
    options.solve.tol_solve = cfg.tol_solve;
    options.solve.rank_tolerance = cfg.rank_tol;
    const bvp::ContinuityReport report = bvp::run_family(family, grid, options);

    std::cout << "grid: N=" << grid.num_steps() << "\n";
    std::cout << "base status: " << bvp::to_string(report.base_status) << "\n";
    std::cout << "base index: " << report.base_fredholm.index << " (dim ker "
              << report.base_fredholm.dim_ker << ", dim coker " << report.base_fredholm.dim_coker
              << ")\n";
    std::cout << "condition (0) nondegenerate base: "
              << (report.verdicts.invertible_base ? "holds" : "fails") << "\n";
    std::cout << "condition (I) coefficient convergence: "
              << (report.verdicts.coefficients_converge ? "holds" : "fails") << "\n";
    std::cout << "condition (II) boundary convergence: "
              << (report.verdicts.boundary_converges ? "holds" : "fails") << "\n";
    std::cout << "gamma1: " << bvp::format_sci(report.gamma1) << "\n";
    std::cout << "gamma2: " << bvp::format_sci(report.gamma2) << "\n";

    try {
        const bvp::TwoSidedCheck two_sided = bvp::two_sided_estimate_check(report, options);
        std::cout << "two-sided estimate: " << (two_sided.pass ? "pass" : "fail")
                  << " (tail spread " << bvp::format_sci(two_sided.tail_spread) << ")\n";
    } catch (const bvp::NumericsError& e) {
        std::cout << "two-sided estimate: skipped (" << e.what() << ")\n";
    }
    bool semi = true;
    for (const auto& [eps, ok] : bvp::semicontinuity_check(report)) semi = semi && ok;
    std::cout << "tail semicontinuity: " << (semi ? "holds" : "fails") << "\n";

    if (cfg.out) {
        auto os = open_out(*cfg.out);
        bvp::write_continuity_csv(os, report);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear boundary value problems: characteristic matrix analysis, solving, "
                 "and perturbation studies"};
    app.require_subcommand(1);

    RunConfig cfg;
    CLI::App* analyze = app.add_subcommand("analyze", "characteristic matrix and Fredholm numbers");
    add_common_flags(analyze, cfg, true);
    CLI::App* solve = app.add_subcommand("solve", "solve the boundary value problem");
    add_common_flags(solve, cfg, true);
    CLI::App* continuity =
        app.add_subcommand("continuity", "run a perturbation family study");
    add_common_flags(continuity, cfg, true);
    app.add_subcommand("selftest", "run the built-in closed-form oracle suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (analyze->parsed()) return run_analyze(cfg);
        if (solve->parsed()) return run_solve(cfg);
        if (continuity->parsed()) return run_continuity(cfg);
        return bvp::run_selftest(std::cout) ? kExitOk : kExitNumerical;
    } catch (const bvp::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const bvp::NumericsError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
