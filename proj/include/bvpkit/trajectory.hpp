#pragma once

#include <vector>

#include "bvpkit/grid.hpp"
#include "bvpkit/matrix_function.hpp"
#include "bvpkit/types.hpp"

namespace bvp {

/// Sampled jet of a matrix-valued function on a grid: value(k, i) holds the
/// k-th derivative at node i, for k = 0 .. max_order.
class Trajectory {
public:
    Trajectory(Grid grid, Eigen::Index rows, Eigen::Index cols, int max_order);

    /// Samples a descriptor and its derivatives onto the grid.
    static Trajectory from_function(const MatrixFunction& f, const Grid& grid, int max_order);

    const Grid& grid() const { return grid_; }
    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }
    int max_order() const { return max_order_; }

    const Matrix& value(int order, int node) const;
    Matrix& value_mut(int order, int node);

    /// Extends storage with zero samples up to new_max_order.
    void grow(int new_max_order);

    /// Componentwise linear update: this += w * other. Grids and shapes must
    /// match; other may carry more derivative orders than this.
    Trajectory& add_scaled(const Trajectory& other, Complex w);

    /// Right multiplication by a constant matrix, applied at every node and
    /// derivative order.
    Trajectory right_multiplied(const Matrix& weights) const;

private:
    Grid grid_;
    Eigen::Index rows_, cols_;
    int max_order_;
    std::vector<std::vector<Matrix>> samples_;  // [order][node]
};

/// x - y as a fresh trajectory over the common grid.
Trajectory difference(const Trajectory& x, const Trajectory& y);

}  // namespace bvp
