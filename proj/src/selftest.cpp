#include "bvpkit/selftest.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <vector>

#include "bvpkit/boundary.hpp"
#include "bvpkit/charmat.hpp"
#include "bvpkit/grid.hpp"
#include "bvpkit/odeint.hpp"
#include "bvpkit/problem.hpp"

namespace bvp {

Complex random_unit_disc(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double rho = std::sqrt(u(rng));
    const double theta = 2.0 * std::numbers::pi * u(rng);
    return std::polar(rho, theta);
}

Matrix random_unit_disc_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = random_unit_disc(rng);
    }
    return out;
}

namespace {

double relative_error(const Matrix& got, const Matrix& want) {
    return (got - want).norm() / want.norm();
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

OracleCheck one_point_oracle() {
    OracleCheck check{.name = "one-point jet closed form", .bound = 1e-6};
    const Stopwatch watch;
    std::mt19937_64 rng(20240601);
    const Grid grid({0.0, 1.0}, 2000);

    for (int trial = 0; trial < 20; ++trial) {
        const int m = 1 + trial % 3;
        const Matrix A = random_unit_disc_matrix(rng, m, m);

        BVProblem problem;
        problem.dims = {.m = m, .r = 1, .n = 3, .l = m, .p = Lp::Two};
        problem.interval = {0.0, 1.0};
        problem.coefficients.push_back(MatrixFunction::constant(A));
        problem.rhs = MatrixFunction::zero(m, 1);
        for (int k = 0; k < 4; ++k) {
            problem.boundary.alphas.push_back(random_unit_disc_matrix(rng, m, m));
        }
        problem.c = Vector::Zero(m);

        const CharacteristicMatrix M = characteristic_matrix(problem, grid);

        Matrix want = Matrix::Zero(m, m);
        Matrix power = Matrix::Identity(m, m);
        for (int k = 0; k < 4; ++k) {
            want += problem.boundary.alphas[k] * power;
            power = power * (-A);
        }
        check.worst = std::max(check.worst, relative_error(M.data, want));
    }
    check.elapsed_seconds = watch.seconds();
    check.pass = check.worst <= check.bound && check.elapsed_seconds < 5.0;
    check.detail = "20 cases, " + std::to_string(check.elapsed_seconds) + " s";
    return check;
}

OracleCheck two_point_oracle() {
    OracleCheck check{.name = "two-point exponential closed form", .bound = 1e-6};
    const Stopwatch watch;
    std::mt19937_64 rng(20240602);
    const Grid grid({0.0, 1.0}, 2000);

    const int cases_m[] = {1, 1, 1, 1, 2, 2, 2, 2};
    const int cases_l_of_m[][2] = {{1, 0}, {2, 0}, {2, 1}, {1, 0},
                                   {2, 0}, {4, 0}, {5, 0}, {1, 0}};
    for (int trial = 0; trial < 8; ++trial) {
        const int m = cases_m[trial];
        const int l = cases_l_of_m[trial][0];

        // Keep A comfortably invertible so the integral closed form is stable.
        Matrix A = random_unit_disc_matrix(rng, m, m);
        while (Eigen::JacobiSVD<Matrix>(A).singularValues().minCoeff() < 0.2) {
            A = random_unit_disc_matrix(rng, m, m);
        }

        std::vector<Matrix> alpha, beta;
        std::vector<PointCondition> conditions;
        for (int k = 0; k < 3; ++k) {
            alpha.push_back(random_unit_disc_matrix(rng, l, m));
            beta.push_back(random_unit_disc_matrix(rng, l, m));
            conditions.push_back({0.0, k, alpha.back()});
            conditions.push_back({1.0, k, beta.back()});
        }

        BVProblem problem;
        problem.dims = {.m = m, .r = 2, .n = 1, .l = l, .p = Lp::Two};
        problem.interval = {0.0, 1.0};
        problem.coefficients.push_back(MatrixFunction::zero(m, m));
        problem.coefficients.push_back(MatrixFunction::constant(A));
        problem.rhs = MatrixFunction::zero(m, 1);
        problem.boundary = boundary_from_point_conditions(problem.interval, 3, conditions);
        problem.c = Vector::Zero(l);

        const CharacteristicMatrix M = characteristic_matrix(problem, grid);

        const Matrix I = Matrix::Identity(m, m);
        const Matrix E = matrix_exponential(-A);
        const Matrix phi_b = A.partialPivLu().solve(I - E);

        // Canonical normalized-jet basis: the second solution is the
        // antiderivative of exp(-A(t-a)), so its jets at a are I, -A, ... and
        // its value at b is phi_b.
        Matrix want(l, 2 * m);
        want.leftCols(m) = alpha[0] + beta[0];
        want.rightCols(m) =
            beta[0] * phi_b + (alpha[1] + beta[1] * E) + (alpha[2] + beta[2] * E) * (-A);
        check.worst = std::max(check.worst, relative_error(M.data, want));

        // Display form: the same data over the fundamental basis
        // {I, exp(-A(t-a))}, reached by the constant column transform
        // [[I, I], [0, -A]].
        Matrix transform = Matrix::Zero(2 * m, 2 * m);
        transform.topLeftCorner(m, m) = I;
        transform.topRightCorner(m, m) = I;
        transform.bottomRightCorner(m, m) = -A;
        Matrix display(l, 2 * m);
        display.leftCols(m) = alpha[0] + beta[0];
        display.rightCols(m) = (alpha[0] + beta[0] * E) - (alpha[1] + beta[1] * E) * A +
                               (alpha[2] + beta[2] * E) * A * A;
        check.worst = std::max(check.worst, relative_error(M.data * transform, display));
    }
    check.elapsed_seconds = watch.seconds();
    check.pass = check.worst <= check.bound;
    check.detail = "8 cases, canonical and display bases";
    return check;
}

OracleCheck multipoint_oracle() {
    OracleCheck check{.name = "multipoint order-zero collapse", .bound = 1e-10};
    const Stopwatch watch;
    std::mt19937_64 rng(20240603);
    const Grid grid({0.0, 1.0}, 2000);
    const double points[] = {0.0, 0.37, 1.0};
    bool fredholm_ok = true;

    const int dims_ml[][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 5}};
    for (int trial = 0; trial < 7; ++trial) {
        const bool constructed = trial == 6;
        const int m = constructed ? 2 : dims_ml[trial][0];
        const int l = constructed ? 2 : dims_ml[trial][1];

        // The constructed case pins rank-one order-zero weights at every point.
        const Matrix rank_one = random_unit_disc_matrix(rng, l, 1) * random_unit_disc_matrix(rng, 1, m);

        std::vector<PointCondition> conditions;
        Matrix sum = Matrix::Zero(l, m);
        for (double t : points) {
            for (int beta = 0; beta < 3; ++beta) {
                const Matrix w = constructed && beta == 0 ? rank_one
                                                          : random_unit_disc_matrix(rng, l, m);
                if (beta == 0) sum += w;
                conditions.push_back({t, beta, w});
            }
        }

        BVProblem problem;
        problem.dims = {.m = m, .r = 1, .n = 2, .l = l, .p = Lp::Two};
        problem.interval = {0.0, 1.0};
        problem.coefficients.push_back(MatrixFunction::zero(m, m));
        problem.rhs = MatrixFunction::zero(m, 1);
        problem.boundary = boundary_from_point_conditions(problem.interval, 3, conditions);
        problem.c = Vector::Zero(l);

        const CharacteristicMatrix M = characteristic_matrix(problem, grid);
        check.worst = std::max(check.worst, (M.data - sum).norm());

        const FredholmNumbers fred = fredholm_numbers(M, problem.dims);
        fredholm_ok = fredholm_ok && fred.dim_ker == m - M.rank && fred.dim_coker == l - M.rank &&
                      fred.index == m - l;
        if (constructed) {
            fredholm_ok = fredholm_ok && M.rank == 1 && fred.dim_ker == 1 && fred.dim_coker == 1;
        }
    }
    check.elapsed_seconds = watch.seconds();
    check.pass = check.worst <= check.bound && fredholm_ok;
    check.detail = fredholm_ok ? "7 cases, Fredholm numbers exact"
                               : "7 cases, Fredholm number mismatch";
    return check;
}

bool run_selftest(std::ostream& os) {
    bool all = true;
    for (const OracleCheck& check : {one_point_oracle(), two_point_oracle(), multipoint_oracle()}) {
        os << (check.pass ? "PASS" : "FAIL") << "  " << check.name << "  worst "
           << check.worst << " (bound " << check.bound << "; " << check.detail << ")\n";
        all = all && check.pass;
    }
    return all;
}

}  // namespace bvp
