#pragma once

#include <vector>

#include "bvpkit/grid.hpp"
#include "bvpkit/trajectory.hpp"
#include "bvpkit/types.hpp"

namespace bvp {

/// Composite Simpson weights on the grid nodes.
std::vector<double> simpson_weights(const Grid& grid);

/// L_p norm of one derivative level of a trajectory. The pointwise magnitude
/// is the Euclidean (Frobenius) norm of the sample; integrals use composite
/// Simpson, and p = inf takes the maximum over grid nodes.
double lp_norm(const Trajectory& y, int derivative, Lp p);

/// Sobolev-style norm: sum of lp_norm over derivative orders 0 .. k.
/// Throws NumericsError when the trajectory carries fewer than k derivatives.
double sobolev_norm(const Trajectory& y, int k, Lp p);

/// Maximum absolute entry over all nodes of one derivative level.
double sup_norm(const Trajectory& y, int derivative = 0);

}  // namespace bvp
