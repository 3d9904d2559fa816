#pragma once

#include <optional>
#include <vector>

#include "bvpkit/problem.hpp"
#include "bvpkit/trajectory.hpp"

namespace bvp {

/// Characteristic matrix of a problem: the boundary operator applied to the
/// fundamental solutions, one l x m block per solution, l x (m r) in total.
/// Carries the singular values and the numerical rank decision.
struct CharacteristicMatrix {
    Matrix data;                      // l x (m r)
    Eigen::Index block_cols = 0;      // m
    Eigen::VectorXd singular_values;  // descending
    double rank_tolerance = 0.0;
    int rank = 0;

    Matrix block(int k) const { return data.middleCols(k * block_cols, block_cols); }
    int num_blocks() const {
        return block_cols == 0 ? 0 : static_cast<int>(data.cols() / block_cols);
    }
};

/// dim_ker = mr - rank, dim_coker = l - rank, index = mr - l.
struct FredholmNumbers {
    int dim_ker = 0;
    int dim_coker = 0;
    int index = 0;
};

/// Runs the SVD rank analysis on an assembled block matrix. Without an
/// override the threshold is max(rows, cols) * sigma_max * 2^-52.
CharacteristicMatrix analyze_characteristic(Matrix data, Eigen::Index block_cols,
                                            std::optional<double> rank_tolerance = std::nullopt);

/// Applies the boundary operator to already computed fundamental solutions.
CharacteristicMatrix characteristic_from_solutions(const BoundaryOperator& B,
                                                   const std::vector<Trajectory>& fundamentals,
                                                   std::optional<double> rank_tolerance = std::nullopt);

/// Full pipeline: integrate the fundamental solutions of the problem on the
/// grid, extend their jets, apply the boundary operator, analyze the rank.
CharacteristicMatrix characteristic_matrix(const BVProblem& problem, const Grid& grid,
                                           std::optional<double> rank_tolerance = std::nullopt);

FredholmNumbers fredholm_numbers(const CharacteristicMatrix& M, const ProblemDims& dims);

/// The problem operator is invertible exactly when l = m r and the
/// characteristic matrix has full numerical rank.
bool is_invertible(const CharacteristicMatrix& M, const ProblemDims& dims);

}  // namespace bvp
