#include "bvpkit/odeint.hpp"

#include <algorithm>
#include <cmath>

namespace bvp {

namespace {

struct CoefficientSet {
    std::vector<Matrix> A;  // A_0 .. A_{r-1} at one time
    Matrix f;               // forcing at the same time (zero when absent)
};

CoefficientSet eval_coefficients(const std::vector<MatrixFunction>& coefficients,
                                 const MatrixFunction* forcing, double t, Eigen::Index m,
                                 Eigen::Index cols) {
    CoefficientSet set;
    set.A.reserve(coefficients.size());
    for (const MatrixFunction& A : coefficients) set.A.push_back(A.eval(t));
    set.f = forcing ? forcing->eval(t) : Matrix::Zero(m, cols);
    return set;
}

// Companion right-hand side: blocks shift down one order, the top order comes
// from the differential relation.
Matrix companion_rhs(const CoefficientSet& set, const Matrix& state, Eigen::Index m, int r) {
    Matrix out(state.rows(), state.cols());
    for (int k = 0; k + 1 < r; ++k) {
        out.middleRows(k * m, m) = state.middleRows((k + 1) * m, m);
    }
    Matrix top = set.f;
    for (int k = 0; k < r; ++k) top -= set.A[k] * state.middleRows(k * m, m);
    out.middleRows((r - 1) * m, m) = top;
    return out;
}

std::vector<std::vector<double>> binomial_table(int n) {
    std::vector<std::vector<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1.0);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

}  // namespace

Trajectory integrate(const std::vector<MatrixFunction>& coefficients,
                     const MatrixFunction* forcing, const std::vector<Matrix>& initial_jet,
                     const Grid& grid) {
    const int r = static_cast<int>(coefficients.size());
    if (r < 1) throw std::invalid_argument("integrate needs at least one coefficient matrix");
    const Eigen::Index m = coefficients[0].rows();
    for (const MatrixFunction& A : coefficients) {
        if (A.rows() != m || A.cols() != m) {
            throw std::invalid_argument("coefficient matrices must be square and equally sized");
        }
    }
    if (static_cast<int>(initial_jet.size()) != r) {
        throw std::invalid_argument("initial jet must carry r derivative orders");
    }
    const Eigen::Index cols = initial_jet[0].cols();
    for (const Matrix& j : initial_jet) {
        if (j.rows() != m || j.cols() != cols) {
            throw std::invalid_argument("initial jet blocks must be m x cols");
        }
    }
    if (forcing && (forcing->rows() != m || forcing->cols() != cols)) {
        throw std::invalid_argument("forcing shape must match m x cols");
    }

    Matrix state(m * r, cols);
    for (int k = 0; k < r; ++k) state.middleRows(k * m, m) = initial_jet[k];

    Trajectory out(grid, m, cols, r);
    const double h = grid.step();
    auto store = [&](int node, const Matrix& s) {
        for (int k = 0; k < r; ++k) out.value_mut(k, node) = s.middleRows(k * m, m);
        const CoefficientSet set = eval_coefficients(coefficients, forcing, grid.point(node), m, cols);
        Matrix top = set.f;
        for (int k = 0; k < r; ++k) top -= set.A[k] * s.middleRows(k * m, m);
        out.value_mut(r, node) = top;
    };

    store(0, state);
    for (int i = 0; i < grid.num_steps(); ++i) {
        const double t0 = grid.point(i);
        const CoefficientSet s0 = eval_coefficients(coefficients, forcing, t0, m, cols);
        const CoefficientSet sm =
            eval_coefficients(coefficients, forcing, t0 + 0.5 * h, m, cols);
        const CoefficientSet s1 = eval_coefficients(coefficients, forcing, grid.point(i + 1), m, cols);

        const Matrix k1 = companion_rhs(s0, state, m, r);
        const Matrix k2 = companion_rhs(sm, state + (0.5 * h) * k1, m, r);
        const Matrix k3 = companion_rhs(sm, state + (0.5 * h) * k2, m, r);
        const Matrix k4 = companion_rhs(s1, state + h * k3, m, r);
        state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        store(i + 1, state);
    }
    return out;
}

Trajectory extend_derivatives(Trajectory y, const std::vector<MatrixFunction>& coefficients,
                              const MatrixFunction* forcing, int target_order) {
    const int r = static_cast<int>(coefficients.size());
    if (y.max_order() < r) {
        throw NumericsError("insufficient jet: extension starts from derivative order r");
    }
    if (target_order <= y.max_order()) return y;

    const int extra = target_order - r;  // highest equation derivative taken
    for (const MatrixFunction& A : coefficients) {
        if (A.max_derivative_order() < extra) {
            throw NumericsError(
                "insufficient smoothness: coefficients cannot supply derivative order " +
                std::to_string(extra));
        }
    }
    if (forcing && forcing->max_derivative_order() < extra) {
        throw NumericsError("insufficient smoothness: forcing cannot supply derivative order " +
                            std::to_string(extra));
    }

    const auto binom = binomial_table(extra);
    const Eigen::Index m = y.rows(), cols = y.cols();
    const int first = y.max_order() - r + 1;  // lowest order not yet carried
    y.grow(target_order);
    for (int node = 0; node < y.grid().num_points(); ++node) {
        const double t = y.grid().point(node);
        for (int i = first; i <= extra; ++i) {
            // y^(r+i) = f^(i) - sum_k sum_nu C(i,nu) A_k^(nu) y^(k+i-nu)
            Matrix val = forcing ? forcing->eval(t, i) : Matrix::Zero(m, cols);
            for (int k = 0; k < r; ++k) {
                for (int nu = 0; nu <= i; ++nu) {
                    val -= binom[i][nu] * (coefficients[k].eval(t, nu) * y.value(k + i - nu, node));
                }
            }
            y.value_mut(r + i, node) = val;
        }
    }
    return y;
}

std::vector<Trajectory> fundamental_solutions(const std::vector<MatrixFunction>& coefficients,
                                              const Grid& grid, int extend_to) {
    const int r = static_cast<int>(coefficients.size());
    const Eigen::Index m = coefficients.empty() ? 0 : coefficients[0].rows();
    std::vector<Trajectory> out;
    out.reserve(r);
    for (int k = 0; k < r; ++k) {
        std::vector<Matrix> jet(r, Matrix::Zero(m, m));
        jet[k] = Matrix::Identity(m, m);
        Trajectory y = integrate(coefficients, nullptr, jet, grid);
        out.push_back(extend_derivatives(std::move(y), coefficients, nullptr, extend_to));
    }
    return out;
}

}  // namespace bvp
