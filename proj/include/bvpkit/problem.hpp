#pragma once

#include <string>
#include <vector>

#include "bvpkit/boundary.hpp"
#include "bvpkit/matrix_function.hpp"
#include "bvpkit/types.hpp"

namespace bvp {

/// Linear boundary value problem
///   y^(r) + sum_{k=0}^{r-1} A_k y^(k) = f  on (a, b),   By = c,
/// with m-vector unknown y, m x m coefficients A_k, and l boundary conditions.
struct BVProblem {
    ProblemDims dims;
    Interval interval;
    std::vector<MatrixFunction> coefficients;  // r entries, index = derivative multiplied
    MatrixFunction rhs = MatrixFunction::zero(1, 1);  // m x 1
    BoundaryOperator boundary;
    Vector c;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks dimensions, shapes, jet counts, and derivative capability against
/// the declared dims. Violations are returned as data, not thrown.
ValidationReport validate(const BVProblem& problem);

}  // namespace bvp
