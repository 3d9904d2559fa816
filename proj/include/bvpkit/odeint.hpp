#pragma once

#include <vector>

#include "bvpkit/grid.hpp"
#include "bvpkit/matrix_function.hpp"
#include "bvpkit/trajectory.hpp"

namespace bvp {

/// Integrates y^(r) + sum_k A_k y^(k) = f columnwise with classical
/// fixed-step RK4 on the equivalent first-order system.
///
/// coefficients holds A_0 .. A_{r-1} (m x m); forcing is m x cols or null for
/// the homogeneous equation; initial_jet holds y^(k)(a) for k = 0 .. r-1.
/// The result carries derivative orders 0 .. r: orders below r come from the
/// companion state, order r from the differential relation at each node.
Trajectory integrate(const std::vector<MatrixFunction>& coefficients,
                     const MatrixFunction* forcing, const std::vector<Matrix>& initial_jet,
                     const Grid& grid);

/// Extends a trajectory of the same equation with derivative orders r+1 ..
/// target_order by differentiating the equation (Leibniz rule on the
/// coefficient products); never differentiates samples numerically.
Trajectory extend_derivatives(Trajectory y, const std::vector<MatrixFunction>& coefficients,
                              const MatrixFunction* forcing, int target_order);

/// The r matrix solutions Y_k of the homogeneous equation with
/// Y_k^(j)(a) = delta_{kj} I, each extended to extend_to derivative orders.
std::vector<Trajectory> fundamental_solutions(const std::vector<MatrixFunction>& coefficients,
                                              const Grid& grid, int extend_to);

/// exp(A) by scaling and squaring with diagonal Pade approximants (degrees
/// 3/5/7/9/13 chosen by backward-error bounds on the 1-norm).
Matrix matrix_exponential(const Matrix& A);

}  // namespace bvp
