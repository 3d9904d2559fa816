#include "bvpkit/charmat.hpp"

#include <Eigen/SVD>
#include <limits>

#include "bvpkit/odeint.hpp"

namespace bvp {

CharacteristicMatrix analyze_characteristic(Matrix data, Eigen::Index block_cols,
                                            std::optional<double> rank_tolerance) {
    CharacteristicMatrix M;
    M.block_cols = block_cols;
    Eigen::JacobiSVD<Matrix> svd(data);
    M.singular_values = svd.singularValues();
    const double sigma_max = M.singular_values.size() > 0 ? M.singular_values(0) : 0.0;
    M.rank_tolerance = rank_tolerance.value_or(
        static_cast<double>(std::max(data.rows(), data.cols())) * sigma_max *
        std::numeric_limits<double>::epsilon());
    M.rank = 0;
    for (Eigen::Index i = 0; i < M.singular_values.size(); ++i) {
        if (M.singular_values(i) > M.rank_tolerance) ++M.rank;
    }
    M.data = std::move(data);
    return M;
}

CharacteristicMatrix characteristic_from_solutions(const BoundaryOperator& B,
                                                   const std::vector<Trajectory>& fundamentals,
                                                   std::optional<double> rank_tolerance) {
    if (fundamentals.empty()) throw std::invalid_argument("no fundamental solutions given");
    const Eigen::Index l = B.conditions();
    const Eigen::Index m = fundamentals[0].rows();
    Matrix data(l, m * static_cast<Eigen::Index>(fundamentals.size()));
    for (std::size_t k = 0; k < fundamentals.size(); ++k) {
        data.middleCols(k * m, m) = apply_boundary_operator(B, fundamentals[k]);
    }
    return analyze_characteristic(std::move(data), m, rank_tolerance);
}

CharacteristicMatrix characteristic_matrix(const BVProblem& problem, const Grid& grid,
                                           std::optional<double> rank_tolerance) {
    const std::vector<Trajectory> fundamentals =
        fundamental_solutions(problem.coefficients, grid, problem.dims.jet_order());
    return characteristic_from_solutions(problem.boundary, fundamentals, rank_tolerance);
}

FredholmNumbers fredholm_numbers(const CharacteristicMatrix& M, const ProblemDims& dims) {
    FredholmNumbers out;
    out.dim_ker = dims.m * dims.r - M.rank;
    out.dim_coker = dims.l - M.rank;
    out.index = dims.m * dims.r - dims.l;
    return out;
}

bool is_invertible(const CharacteristicMatrix& M, const ProblemDims& dims) {
    return dims.l == dims.m * dims.r && M.rank == dims.m * dims.r;
}

}  // namespace bvp
