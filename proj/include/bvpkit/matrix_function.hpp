#pragma once

#include <limits>
#include <vector>

#include "bvpkit/types.hpp"

namespace bvp {

/// Matrix-valued function of one real variable with exact derivative
/// evaluation up to the kind's capability.
///
/// Kinds:
///  - Constant: fixed matrix, all derivatives exact (zero beyond order 0).
///  - Polynomial: sum C_k t^k with matrix coefficients, all derivatives exact.
///  - Sampled: values on a strictly increasing point set, interpolated by a
///    not-a-knot cubic spline per entry; derivatives reliable up to order 2.
///  - Piecewise: polynomial pieces between breakpoints, used for truncated
///    boundary kernels; derivatives exact inside pieces.
///  - Combination: linear combination of other descriptors.
class MatrixFunction {
public:
    enum class Kind { Constant, Polynomial, Sampled, Piecewise, Combination };

    static constexpr int kUnboundedDerivatives = std::numeric_limits<int>::max();

    static MatrixFunction constant(Matrix value);
    static MatrixFunction zero(Eigen::Index rows, Eigen::Index cols);
    /// F(t) = sum_k coeffs[k] * t^k. At least one coefficient required.
    static MatrixFunction polynomial(std::vector<Matrix> coeffs);
    /// Not-a-knot cubic spline through (points[i], values[i]). Requires at
    /// least two strictly increasing points and equally shaped values.
    static MatrixFunction sampled(std::vector<double> points, std::vector<Matrix> values);
    /// Piece j is a polynomial in t valid on [breaks[j], breaks[j+1]); the
    /// last piece also covers the right endpoint.
    static MatrixFunction piecewise_polynomial(std::vector<double> breaks,
                                               std::vector<std::vector<Matrix>> pieces);
    static MatrixFunction combination(Complex wf, MatrixFunction f, Complex wg, MatrixFunction g);

    /// Value of the requested derivative at t. Throws NumericsError when the
    /// derivative order exceeds max_derivative_order().
    Matrix eval(double t, int derivative = 0) const;

    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }
    Kind kind() const { return kind_; }

    /// Highest derivative order this descriptor evaluates reliably.
    int max_derivative_order() const;

    /// Sample range of a Sampled descriptor; meaningless for other kinds.
    double sample_min() const { return points_.empty() ? 0.0 : points_.front(); }
    double sample_max() const { return points_.empty() ? 0.0 : points_.back(); }

    /// lhs * F(t) with a constant matrix, applied exactly per kind.
    MatrixFunction premultiplied(const Matrix& lhs) const;

private:
    MatrixFunction() = default;

    Matrix eval_spline(double t, int derivative) const;
    Matrix eval_piece(double t, int derivative) const;

    Kind kind_ = Kind::Constant;
    Eigen::Index rows_ = 0, cols_ = 0;

    // Constant: matrices_[0].
    // Polynomial: matrices_ = coefficients in t.
    // Sampled: points_ = knots, matrices_ = cubic coefficients, 4 per interval,
    //          in local coordinates u = t - knot.
    // Piecewise: points_ = breakpoints, pieces_ = polynomial coefficients in t.
    std::vector<Matrix> matrices_;
    std::vector<double> points_;
    std::vector<std::vector<Matrix>> pieces_;
    std::vector<std::pair<Complex, MatrixFunction>> parts_;
};

}  // namespace bvp
