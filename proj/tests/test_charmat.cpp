#include <doctest.h>

#include <cmath>
#include <vector>

#include "bvpkit/charmat.hpp"
#include "bvpkit/odeint.hpp"

using bvp::BVProblem;
using bvp::CharacteristicMatrix;
using bvp::Complex;
using bvp::Grid;
using bvp::Interval;
using bvp::Lp;
using bvp::Matrix;
using bvp::MatrixFunction;
using bvp::Vector;

namespace {

Matrix scalar(double x) {
    Matrix m(1, 1);
    m(0, 0) = x;
    return m;
}

BVProblem scalar_example() {
    BVProblem p;
    p.dims = {.m = 1, .r = 1, .n = 2, .l = 1, .p = Lp::Two};
    p.interval = {0.0, 1.0};
    p.coefficients = {MatrixFunction::constant(scalar(2.0))};
    p.boundary.alphas = {scalar(1.0), scalar(3.0), scalar(0.0)};
    p.c = Vector::Ones(1);
    return p;
}

}  // namespace

TEST_CASE("scalar first-order example produces the hand value") {
    const BVProblem p = scalar_example();
    const Grid grid(p.interval, 200);
    const CharacteristicMatrix M = bvp::characteristic_matrix(p, grid);
    REQUIRE(M.data.rows() == 1);
    REQUIRE(M.data.cols() == 1);
    // Fundamental solution exp(-2t); boundary reads jet at the left endpoint:
    // 1 * 1 + 3 * (-2) = -5 independently of the grid.
    CHECK(std::abs(M.data(0, 0) - Complex(-5.0)) < 1e-12);
    CHECK(M.rank == 1);
    const auto fred = bvp::fredholm_numbers(M, p.dims);
    CHECK(fred.index == 0);
    CHECK(fred.dim_ker == 0);
    CHECK(fred.dim_coker == 0);
    CHECK(bvp::is_invertible(M, p.dims));
}

TEST_CASE("unitary mixing of the conditions preserves the singular values") {
    BVProblem p;
    p.dims = {.m = 2, .r = 1, .n = 1, .l = 2, .p = Lp::Two};
    p.interval = {0.0, 1.0};
    Matrix A(2, 2);
    A << 1.0, -0.5, 0.25, Complex(0.5, 0.5);
    p.coefficients = {MatrixFunction::constant(A)};
    Matrix a0(2, 2), a1(2, 2);
    a0 << 1.0, 2.0, 0.0, 1.0;
    a1 << 0.5, 0.0, 1.0, -1.0;
    p.boundary.alphas = {a0, a1};
    p.boundary.phi = MatrixFunction::polynomial({Matrix::Ones(2, 2), -Matrix::Ones(2, 2)});
    p.c = Vector::Zero(2);

    const Grid grid(p.interval, 200);
    const CharacteristicMatrix M = bvp::characteristic_matrix(p, grid);

    // A unitary reshuffle of the scalar conditions.
    const double s = 1.0 / std::sqrt(2.0);
    Matrix U(2, 2);
    U << Complex(s, 0), Complex(0, s), Complex(0, s), Complex(s, 0);
    BVProblem q = p;
    q.boundary.alphas = {U * a0, U * a1};
    q.boundary.phi = p.boundary.phi->premultiplied(U);
    const CharacteristicMatrix MU = bvp::characteristic_matrix(q, grid);

    CHECK((MU.data - U * M.data).norm() < 1e-12);
    REQUIRE(MU.singular_values.size() == M.singular_values.size());
    for (Eigen::Index i = 0; i < M.singular_values.size(); ++i) {
        CHECK(MU.singular_values(i) ==
              doctest::Approx(M.singular_values(i)).epsilon(1e-12));
    }
    CHECK(MU.rank == M.rank);
}

TEST_CASE("matrix entries converge at fourth order under grid refinement") {
    // Right-endpoint data make the entries depend on the integrated flow:
    // with y' + A y = 0, By = y(b) the matrix equals exp(-A (b-a)).
    BVProblem p;
    p.dims = {.m = 2, .r = 1, .n = 0, .l = 2, .p = Lp::Two};
    p.interval = {0.0, 1.0};
    Matrix A(2, 2);
    A << 3.0, -1.0, 1.0, 2.5;
    p.coefficients = {MatrixFunction::constant(A)};
    std::vector<bvp::PointCondition> conds{{1.0, 0, Matrix::Identity(2, 2)}};
    p.boundary = bvp::boundary_from_point_conditions(p.interval, 1, conds);
    p.c = Vector::Zero(2);

    const Matrix want = bvp::matrix_exponential(-A);
    auto err = [&](int n) {
        const Grid grid(p.interval, n);
        return (bvp::characteristic_matrix(p, grid).data - want).norm();
    };
    const double coarse = err(40);
    const double fine = err(80);
    CHECK(coarse < 1e-4);
    const double order = std::log2(coarse / fine);
    CHECK(order > 3.4);
    CHECK(order < 4.6);
}

TEST_CASE("rank analysis separates kernel and cokernel dimensions") {
    // 3 x 4 block data with block_cols 2: rank 2 out of min(3,4).
    Matrix u(3, 2), v(2, 4);
    u << 1.0, 0.0, 0.0, 1.0, 1.0, 1.0;
    v << 1.0, 2.0, 3.0, 4.0, 0.0, 1.0, -1.0, 0.5;
    const CharacteristicMatrix M = bvp::analyze_characteristic(u * v, 2);
    CHECK(M.rank == 2);
    bvp::ProblemDims dims{.m = 2, .r = 2, .n = 0, .l = 3, .p = Lp::Two};
    const auto fred = bvp::fredholm_numbers(M, dims);
    CHECK(fred.index == 4 - 3);
    CHECK(fred.dim_ker == 4 - 2);
    CHECK(fred.dim_coker == 3 - 2);
    CHECK(fred.dim_ker - fred.dim_coker == fred.index);
    CHECK_FALSE(bvp::is_invertible(M, dims));
}

TEST_CASE("rank tolerance override reclassifies tiny singular values") {
    Matrix D = Matrix::Zero(2, 2);
    D(0, 0) = 1.0;
    D(1, 1) = 1e-9;
    const CharacteristicMatrix strict = bvp::analyze_characteristic(D, 1);
    CHECK(strict.rank == 2);  // 1e-9 clears the machine-epsilon threshold
    const CharacteristicMatrix loose = bvp::analyze_characteristic(D, 1, 1e-6);
    CHECK(loose.rank == 1);
    CHECK(loose.rank_tolerance == 1e-6);
}

TEST_CASE("blocks expose the per-solution columns") {
    Matrix data(2, 4);
    data << 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0;
    const CharacteristicMatrix M = bvp::analyze_characteristic(data, 2);
    CHECK(M.num_blocks() == 2);
    CHECK((M.block(0) - data.leftCols(2)).norm() == 0.0);
    CHECK((M.block(1) - data.rightCols(2)).norm() == 0.0);
}
