#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bvpkit/matrix_function.hpp"
#include "bvpkit/trajectory.hpp"
#include "bvpkit/types.hpp"

namespace bvp {

/// Boundary operator in analytic form:
///   By = sum_k alphas[k] y^(k)(a) + integral of phi(t) y^(J)(t) dt,
/// where J = alphas.size() is the jet order carried by admissible arguments
/// and the integral runs over the problem interval. phi absent means a zero
/// kernel.
struct BoundaryOperator {
    std::vector<Matrix> alphas;          // J matrices, each l x m
    std::optional<MatrixFunction> phi;   // l x m

    int jet_order() const { return static_cast<int>(alphas.size()); }
    Eigen::Index conditions() const { return alphas.empty() ? 0 : alphas[0].rows(); }
    Eigen::Index space_dim() const { return alphas.empty() ? 0 : alphas[0].cols(); }
};

/// Applies the operator columnwise to a trajectory carrying at least jet_order
/// derivatives; returns an l x cols matrix. The kernel integral uses composite
/// Simpson on the trajectory grid.
Matrix apply_boundary_operator(const BoundaryOperator& B, const Trajectory& y);

/// One point-evaluation term W * y^(derivative)(t) of a multipoint condition.
struct PointCondition {
    double t;
    int derivative;
    Matrix weight;  // l x m
};

/// Encodes a finite sum of point-evaluation terms into the analytic form via
/// Taylor expansion at the left endpoint with integral remainder. Derivative
/// orders must stay below jet_order; interior points produce a truncated
/// (piecewise polynomial) kernel.
BoundaryOperator boundary_from_point_conditions(const Interval& interval, int jet_order,
                                                std::span<const PointCondition> conditions);

}  // namespace bvp
