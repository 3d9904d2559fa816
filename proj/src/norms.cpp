#include "bvpkit/norms.hpp"

#include <algorithm>
#include <cmath>

namespace bvp {

std::vector<double> simpson_weights(const Grid& grid) {
    const int n = grid.num_points();
    std::vector<double> w(n, 0.0);
    const double scale = grid.step() / 3.0;
    w[0] = w[n - 1] = scale;
    for (int i = 1; i < n - 1; ++i) w[i] = scale * (i % 2 == 1 ? 4.0 : 2.0);
    return w;
}

double lp_norm(const Trajectory& y, int derivative, Lp p) {
    if (derivative > y.max_order()) {
        throw NumericsError("insufficient jet: norm requested derivative order " +
                            std::to_string(derivative));
    }
    const int n = y.grid().num_points();
    if (p == Lp::Inf) {
        double best = 0.0;
        for (int i = 0; i < n; ++i) best = std::max(best, y.value(derivative, i).norm());
        return best;
    }
    const std::vector<double> w = simpson_weights(y.grid());
    double acc = 0.0;
    if (p == Lp::One) {
        for (int i = 0; i < n; ++i) acc += w[i] * y.value(derivative, i).norm();
        return acc;
    }
    for (int i = 0; i < n; ++i) acc += w[i] * y.value(derivative, i).squaredNorm();
    return std::sqrt(acc);
}

double sobolev_norm(const Trajectory& y, int k, Lp p) {
    if (k > y.max_order()) {
        throw NumericsError("insufficient jet: norm of order " + std::to_string(k) +
                            " needs derivatives the trajectory does not carry");
    }
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += lp_norm(y, j, p);
    return acc;
}

double sup_norm(const Trajectory& y, int derivative) {
    double best = 0.0;
    for (int i = 0; i < y.grid().num_points(); ++i) {
        best = std::max(best, y.value(derivative, i).cwiseAbs().maxCoeff());
    }
    return best;
}

}  // namespace bvp
