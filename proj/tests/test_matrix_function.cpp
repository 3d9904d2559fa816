#include <doctest.h>

#include <cmath>
#include <vector>

#include "bvpkit/matrix_function.hpp"

using bvp::Complex;
using bvp::Matrix;
using bvp::MatrixFunction;

namespace {

Matrix scalar(double x) {
    Matrix m(1, 1);
    m(0, 0) = x;
    return m;
}

double entry(const Matrix& m) { return m(0, 0).real(); }

}  // namespace

TEST_CASE("constant descriptor evaluates itself and kills derivatives") {
    Matrix v(2, 2);
    v << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(-4, 5);
    const MatrixFunction f = MatrixFunction::constant(v);
    CHECK(f.rows() == 2);
    CHECK(f.cols() == 2);
    CHECK((f.eval(0.0) - v).norm() == 0.0);
    CHECK((f.eval(17.5) - v).norm() == 0.0);
    CHECK(f.eval(1.0, 1).norm() == 0.0);
    CHECK(f.eval(1.0, 9).norm() == 0.0);
    CHECK(f.max_derivative_order() == MatrixFunction::kUnboundedDerivatives);
}

TEST_CASE("zero descriptor has the requested shape") {
    const MatrixFunction z = MatrixFunction::zero(3, 2);
    CHECK(z.rows() == 3);
    CHECK(z.cols() == 2);
    CHECK(z.eval(0.3).norm() == 0.0);
}

TEST_CASE("polynomial evaluation matches Horner and falling-factorial derivatives") {
    // F(t) = 1 - 2 t + 3 t^2 + 0.5 t^3 entrywise in a 1x1 matrix.
    const MatrixFunction f = MatrixFunction::polynomial(
        {scalar(1.0), scalar(-2.0), scalar(3.0), scalar(0.5)});
    auto poly = [](double t) { return 1.0 - 2.0 * t + 3.0 * t * t + 0.5 * t * t * t; };
    auto dpoly = [](double t) { return -2.0 + 6.0 * t + 1.5 * t * t; };
    auto ddpoly = [](double t) { return 6.0 + 3.0 * t; };
    for (double t : {-1.5, 0.0, 0.25, 2.0}) {
        CHECK(entry(f.eval(t)) == doctest::Approx(poly(t)).epsilon(1e-14));
        CHECK(entry(f.eval(t, 1)) == doctest::Approx(dpoly(t)).epsilon(1e-14));
        CHECK(entry(f.eval(t, 2)) == doctest::Approx(ddpoly(t)).epsilon(1e-14));
        CHECK(entry(f.eval(t, 3)) == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(f.eval(t, 4).norm() == 0.0);
    }
    CHECK(f.max_derivative_order() == MatrixFunction::kUnboundedDerivatives);
    CHECK_THROWS_AS(MatrixFunction::polynomial({}), std::invalid_argument);
}

TEST_CASE("not-a-knot spline reproduces cubics exactly") {
    auto cubic = [](double t) { return t * t * t - 2.0 * t * t + t - 0.5; };
    auto dcubic = [](double t) { return 3.0 * t * t - 4.0 * t + 1.0; };
    auto ddcubic = [](double t) { return 6.0 * t - 4.0; };
    std::vector<double> pts;
    std::vector<Matrix> vals;
    for (int i = 0; i <= 6; ++i) {
        const double t = 2.0 * i / 6.0;
        pts.push_back(t);
        vals.push_back(scalar(cubic(t)));
    }
    const MatrixFunction f = MatrixFunction::sampled(pts, vals);
    for (double t : {0.05, 0.4, 1.0, 1.37, 1.99, 2.0}) {
        CHECK(entry(f.eval(t)) == doctest::Approx(cubic(t)).epsilon(1e-12));
        CHECK(entry(f.eval(t, 1)) == doctest::Approx(dcubic(t)).epsilon(1e-11));
        CHECK(entry(f.eval(t, 2)) == doctest::Approx(ddcubic(t)).epsilon(1e-10));
    }
    CHECK(f.max_derivative_order() == 2);
    CHECK_THROWS_AS(f.eval(1.0, 3), bvp::NumericsError);
    CHECK(f.sample_min() == 0.0);
    CHECK(f.sample_max() == 2.0);
}

TEST_CASE("spline interpolation error shrinks at fourth order on sin") {
    auto build = [](int n) {
        std::vector<double> pts;
        std::vector<Matrix> vals;
        for (int i = 0; i <= n; ++i) {
            const double t = 3.141592653589793 * i / n;
            pts.push_back(t);
            vals.push_back(scalar(std::sin(t)));
        }
        return MatrixFunction::sampled(pts, vals);
    };
    auto max_err = [](const MatrixFunction& f) {
        double worst = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = 3.141592653589793 * i / 1000.0;
            worst = std::max(worst, std::abs(entry(f.eval(t)) - std::sin(t)));
        }
        return worst;
    };
    const double coarse = max_err(build(20));
    const double fine = max_err(build(40));
    CHECK(coarse < 1e-5);
    // Fourth-order convergence, loosely bracketed: rules out a second-order
    // interpolant while allowing boundary-driven pre-asymptotic wobble.
    const double order = std::log2(coarse / fine);
    CHECK(order > 3.3);
    CHECK(order < 5.3);
}

TEST_CASE("sampled factory rejects bad inputs") {
    CHECK_THROWS_AS(MatrixFunction::sampled({0.0}, {scalar(1.0)}), std::invalid_argument);
    CHECK_THROWS_AS(MatrixFunction::sampled({0.0, 0.0}, {scalar(1.0), scalar(2.0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MatrixFunction::sampled({1.0, 0.0}, {scalar(1.0), scalar(2.0)}),
                    std::invalid_argument);
}

TEST_CASE("piecewise descriptor selects pieces and covers the right endpoint") {
    // piece 0 on [0,1): value 2 + t; piece 1 on [1,2]: value t^2.
    const MatrixFunction f = MatrixFunction::piecewise_polynomial(
        {0.0, 1.0, 2.0},
        {{scalar(2.0), scalar(1.0)}, {scalar(0.0), scalar(0.0), scalar(1.0)}});
    CHECK(entry(f.eval(0.5)) == doctest::Approx(2.5));
    CHECK(entry(f.eval(1.0)) == doctest::Approx(1.0));  // right-continuous at the break
    CHECK(entry(f.eval(1.5)) == doctest::Approx(2.25));
    CHECK(entry(f.eval(2.0)) == doctest::Approx(4.0));  // last piece includes the endpoint
    CHECK(entry(f.eval(0.5, 1)) == doctest::Approx(1.0));
    CHECK(entry(f.eval(1.5, 1)) == doctest::Approx(3.0));
}

TEST_CASE("combination mixes descriptors linearly with the weakest smoothness cap") {
    const MatrixFunction p = MatrixFunction::polynomial({scalar(0.0), scalar(1.0)});  // t
    std::vector<double> pts;
    std::vector<Matrix> vals;
    for (int i = 0; i <= 8; ++i) {
        pts.push_back(i / 8.0);
        vals.push_back(scalar(std::exp(i / 8.0)));
    }
    const MatrixFunction s = MatrixFunction::sampled(pts, vals);
    const MatrixFunction mix = MatrixFunction::combination(2.0, p, Complex(0, 1), s);
    const Complex got = mix.eval(0.5)(0, 0);
    CHECK(std::abs(got - (Complex(1.0) + Complex(0, 1) * std::exp(0.5))) < 1e-5);
    CHECK(mix.max_derivative_order() == 2);  // inherited from the sampled part
    CHECK_THROWS_AS(mix.eval(0.5, 3), bvp::NumericsError);
}

TEST_CASE("premultiplied applies a constant left factor across kinds") {
    Matrix u(2, 2);
    u << Complex(0, 1), Complex(1, 0), Complex(-1, 0), Complex(0, -1);
    Matrix c0(2, 1), c1(2, 1);
    c0 << Complex(1, 0), Complex(2, 0);
    c1 << Complex(0, 1), Complex(-1, 0);
    const MatrixFunction f = MatrixFunction::polynomial({c0, c1});
    const MatrixFunction g = f.premultiplied(u);
    for (double t : {0.0, 0.7, 2.0}) {
        CHECK((g.eval(t) - u * f.eval(t)).norm() < 1e-15);
        CHECK((g.eval(t, 1) - u * f.eval(t, 1)).norm() < 1e-15);
    }
    CHECK_THROWS_AS(f.premultiplied(Matrix::Identity(3, 3)), std::invalid_argument);
}
