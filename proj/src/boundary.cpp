#include "bvpkit/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "bvpkit/norms.hpp"

namespace bvp {

Matrix apply_boundary_operator(const BoundaryOperator& B, const Trajectory& y) {
    const int J = B.jet_order();
    if (J == 0) throw std::invalid_argument("boundary operator has no jet matrices");
    if (y.max_order() < J) {
        throw NumericsError("insufficient jet: boundary operator needs derivatives up to order " +
                            std::to_string(J));
    }
    if (B.space_dim() != y.rows()) {
        throw std::invalid_argument("boundary operator and trajectory dimension mismatch");
    }
    Matrix out = Matrix::Zero(B.conditions(), y.cols());
    for (int k = 0; k < J; ++k) out += B.alphas[k] * y.value(k, 0);
    if (B.phi) {
        const std::vector<double> w = simpson_weights(y.grid());
        for (int i = 0; i < y.grid().num_points(); ++i) {
            out += w[i] * (B.phi->eval(y.grid().point(i)) * y.value(J, i));
        }
    }
    return out;
}

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

double binomial(int n, int k) {
    double out = 1.0;
    for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

// Coefficients in t of (t0 - t)^q / q!.
std::vector<double> remainder_kernel_coeffs(double t0, int q) {
    std::vector<double> c(q + 1, 0.0);
    const double scale = 1.0 / factorial(q);
    for (int j = 0; j <= q; ++j) {
        c[j] = scale * binomial(q, j) * std::pow(t0, q - j) * (j % 2 == 0 ? 1.0 : -1.0);
    }
    return c;
}

}  // namespace

BoundaryOperator boundary_from_point_conditions(const Interval& interval, int jet_order,
                                                std::span<const PointCondition> conditions) {
    if (jet_order < 1) throw std::invalid_argument("jet order must be at least 1");
    if (conditions.empty()) throw std::invalid_argument("no point conditions given");
    const Eigen::Index l = conditions[0].weight.rows();
    const Eigen::Index m = conditions[0].weight.cols();
    const double snap = 1e-12 * std::max(1.0, std::abs(interval.a) + std::abs(interval.b));

    BoundaryOperator B;
    B.alphas.assign(jet_order, Matrix::Zero(l, m));

    // Breakpoints of the truncated kernels: interior condition points only.
    std::vector<double> cuts{interval.a, interval.b};
    for (const PointCondition& pc : conditions) {
        if (pc.weight.rows() != l || pc.weight.cols() != m) {
            throw std::invalid_argument("point condition weights must share one shape");
        }
        if (pc.derivative < 0 || pc.derivative >= jet_order) {
            throw std::invalid_argument("point condition derivative order must lie in [0, jet order)");
        }
        if (pc.t < interval.a - snap || pc.t > interval.b + snap) {
            throw std::invalid_argument("point condition lies outside the interval");
        }
        if (pc.t > interval.a + snap && pc.t < interval.b - snap) {
            cuts.push_back(pc.t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [snap](double x, double y) { return std::abs(x - y) <= snap; }),
               cuts.end());

    const std::size_t num_pieces = cuts.size() - 1;
    std::vector<std::vector<Matrix>> pieces(
        num_pieces, std::vector<Matrix>(jet_order, Matrix::Zero(l, m)));
    bool kernel_used = false;

    for (const PointCondition& pc : conditions) {
        const int beta = pc.derivative;
        if (pc.t <= interval.a + snap) {
            B.alphas[beta] += pc.weight;
            continue;
        }
        // y^(beta)(t0) = sum_{i=beta}^{J-1} y^(i)(a) (t0-a)^(i-beta)/(i-beta)!
        //              + integral_a^t0 (t0-s)^(J-1-beta)/(J-1-beta)! y^(J)(s) ds.
        const double offset = pc.t - interval.a;
        for (int i = beta; i < jet_order; ++i) {
            B.alphas[i] += (std::pow(offset, i - beta) / factorial(i - beta)) * pc.weight;
        }
        kernel_used = true;
        const std::vector<double> kc = remainder_kernel_coeffs(pc.t, jet_order - 1 - beta);
        for (std::size_t piece = 0; piece < num_pieces; ++piece) {
            if (cuts[piece + 1] > pc.t + snap) break;  // kernel vanishes past t0
            for (std::size_t j = 0; j < kc.size(); ++j) {
                pieces[piece][j] += kc[j] * pc.weight;
            }
        }
    }

    if (kernel_used) {
        if (num_pieces == 1) {
            B.phi = MatrixFunction::polynomial(pieces[0]);
        } else {
            B.phi = MatrixFunction::piecewise_polynomial(cuts, std::move(pieces));
        }
    }
    return B;
}

}  // namespace bvp
