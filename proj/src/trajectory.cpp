#include "bvpkit/trajectory.hpp"

#include <algorithm>

namespace bvp {

Trajectory::Trajectory(Grid grid, Eigen::Index rows, Eigen::Index cols, int max_order)
    : grid_(std::move(grid)), rows_(rows), cols_(cols), max_order_(max_order) {
    if (rows <= 0 || cols <= 0 || max_order < 0) {
        throw std::invalid_argument("trajectory needs positive shape and nonnegative order");
    }
    samples_.resize(max_order + 1);
    for (auto& level : samples_) {
        level.assign(grid_.num_points(), Matrix::Zero(rows_, cols_));
    }
}

Trajectory Trajectory::from_function(const MatrixFunction& f, const Grid& grid, int max_order) {
    if (f.max_derivative_order() < max_order) {
        throw NumericsError("insufficient smoothness: descriptor cannot supply derivative order " +
                            std::to_string(max_order));
    }
    Trajectory out(grid, f.rows(), f.cols(), max_order);
    for (int k = 0; k <= max_order; ++k) {
        for (int i = 0; i < grid.num_points(); ++i) {
            out.samples_[k][i] = f.eval(grid.point(i), k);
        }
    }
    return out;
}

const Matrix& Trajectory::value(int order, int node) const {
    if (order < 0 || order > max_order_) {
        throw NumericsError("insufficient jet: trajectory carries orders 0.." +
                            std::to_string(max_order_) + ", requested " + std::to_string(order));
    }
    return samples_[order].at(node);
}

Matrix& Trajectory::value_mut(int order, int node) {
    if (order < 0 || order > max_order_) {
        throw NumericsError("insufficient jet: trajectory carries orders 0.." +
                            std::to_string(max_order_) + ", requested " + std::to_string(order));
    }
    return samples_[order].at(node);
}

void Trajectory::grow(int new_max_order) {
    if (new_max_order <= max_order_) return;
    samples_.resize(new_max_order + 1);
    for (int k = max_order_ + 1; k <= new_max_order; ++k) {
        samples_[k].assign(grid_.num_points(), Matrix::Zero(rows_, cols_));
    }
    max_order_ = new_max_order;
}

Trajectory& Trajectory::add_scaled(const Trajectory& other, Complex w) {
    if (!(grid_ == other.grid_) || rows_ != other.rows_ || cols_ != other.cols_ ||
        other.max_order_ < max_order_) {
        throw std::invalid_argument("trajectory arithmetic needs matching grid, shape, and jet");
    }
    for (int k = 0; k <= max_order_; ++k) {
        for (int i = 0; i < grid_.num_points(); ++i) {
            samples_[k][i] += w * other.samples_[k][i];
        }
    }
    return *this;
}

Trajectory Trajectory::right_multiplied(const Matrix& weights) const {
    if (weights.rows() != cols_) throw std::invalid_argument("right multiplier shape mismatch");
    Trajectory out(grid_, rows_, weights.cols(), max_order_);
    for (int k = 0; k <= max_order_; ++k) {
        for (int i = 0; i < grid_.num_points(); ++i) {
            out.samples_[k][i] = samples_[k][i] * weights;
        }
    }
    return out;
}

Trajectory difference(const Trajectory& x, const Trajectory& y) {
    Trajectory out = x;
    out.add_scaled(y, Complex(-1.0, 0.0));
    return out;
}

}  // namespace bvp
