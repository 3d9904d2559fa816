#include "bvpkit/matrix_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace bvp {

std::string to_string(Lp p) {
    switch (p) {
        case Lp::One: return "1";
        case Lp::Two: return "2";
        case Lp::Inf: return "inf";
    }
    return "?";
}

MatrixFunction MatrixFunction::constant(Matrix value) {
    MatrixFunction f;
    f.kind_ = Kind::Constant;
    f.rows_ = value.rows();
    f.cols_ = value.cols();
    f.matrices_.push_back(std::move(value));
    return f;
}

MatrixFunction MatrixFunction::zero(Eigen::Index rows, Eigen::Index cols) {
    return constant(Matrix::Zero(rows, cols));
}

MatrixFunction MatrixFunction::polynomial(std::vector<Matrix> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial descriptor needs coefficients");
    MatrixFunction f;
    f.kind_ = Kind::Polynomial;
    f.rows_ = coeffs[0].rows();
    f.cols_ = coeffs[0].cols();
    for (const Matrix& c : coeffs) {
        if (c.rows() != f.rows_ || c.cols() != f.cols_) {
            throw std::invalid_argument("polynomial coefficients must share one shape");
        }
    }
    f.matrices_ = std::move(coeffs);
    return f;
}

namespace {

// Thomas solve for a tridiagonal system with matrix-valued right-hand sides.
// Diagonals are scalar; rhs entries are overwritten with the solution.
void solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                       std::vector<double> upper, std::vector<Matrix>& rhs) {
    const std::size_t q = diag.size();
    for (std::size_t i = 1; i < q; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[q - 1] /= diag[q - 1];
    for (std::size_t i = q - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

}  // namespace

MatrixFunction MatrixFunction::sampled(std::vector<double> points, std::vector<Matrix> values) {
    const std::size_t np = points.size();
    if (np < 2) throw std::invalid_argument("sampled descriptor needs at least two points");
    if (values.size() != np) throw std::invalid_argument("sampled points/values length mismatch");
    for (std::size_t i = 1; i < np; ++i) {
        if (!(points[i - 1] < points[i])) {
            throw std::invalid_argument("sampled points must be strictly increasing");
        }
    }
    const Eigen::Index rows = values[0].rows(), cols = values[0].cols();
    for (const Matrix& v : values) {
        if (v.rows() != rows || v.cols() != cols) {
            throw std::invalid_argument("sampled values must share one shape");
        }
    }

    const std::size_t K = np - 1;  // interval count
    std::vector<double> h(K);
    std::vector<Matrix> d(K);
    for (std::size_t i = 0; i < K; ++i) {
        h[i] = points[i + 1] - points[i];
        d[i] = (values[i + 1] - values[i]) / h[i];
    }

    // Second-derivative moments at the knots.
    std::vector<Matrix> moments(np, Matrix::Zero(rows, cols));
    if (K == 1) {
        // Two points: linear interpolant, both moments stay zero.
    } else if (K == 2) {
        // Three points: the not-a-knot conditions collapse both pieces into
        // the single parabola through all samples.
        const Matrix curv = 2.0 * (d[1] - d[0]) / (h[0] + h[1]);
        moments[0] = moments[1] = moments[2] = curv;
    } else {
        // Interior moment equations with the not-a-knot ends eliminated.
        const std::size_t q = K - 1;
        std::vector<double> lower(q, 0.0), diag(q, 0.0), upper(q, 0.0);
        std::vector<Matrix> rhs(q);
        for (std::size_t i = 1; i <= q; ++i) {
            lower[i - 1] = h[i - 1] / 6.0;
            diag[i - 1] = (h[i - 1] + h[i]) / 3.0;
            upper[i - 1] = h[i] / 6.0;
            rhs[i - 1] = d[i] - d[i - 1];
        }
        // M_0 = (1 + h0/h1) M_1 - (h0/h1) M_2 folded into the first row.
        diag[0] += (h[0] / 6.0) * (1.0 + h[0] / h[1]);
        upper[0] -= (h[0] / 6.0) * (h[0] / h[1]);
        lower[0] = 0.0;
        // Mirrored elimination of M_K in the last row.
        diag[q - 1] += (h[K - 1] / 6.0) * (1.0 + h[K - 1] / h[K - 2]);
        lower[q - 1] -= (h[K - 1] / 6.0) * (h[K - 1] / h[K - 2]);
        upper[q - 1] = 0.0;

        solve_tridiagonal(lower, diag, upper, rhs);
        for (std::size_t i = 1; i <= q; ++i) moments[i] = rhs[i - 1];
        moments[0] = (1.0 + h[0] / h[1]) * moments[1] - (h[0] / h[1]) * moments[2];
        moments[K] = (1.0 + h[K - 1] / h[K - 2]) * moments[K - 1] -
                     (h[K - 1] / h[K - 2]) * moments[K - 2];
    }

    MatrixFunction f;
    f.kind_ = Kind::Sampled;
    f.rows_ = rows;
    f.cols_ = cols;
    f.points_ = std::move(points);
    f.matrices_.reserve(4 * K);
    for (std::size_t i = 0; i < K; ++i) {
        // Cubic on [x_i, x_{i+1}] in u = t - x_i.
        f.matrices_.push_back(values[i]);
        f.matrices_.push_back(d[i] - (h[i] / 6.0) * (2.0 * moments[i] + moments[i + 1]));
        f.matrices_.push_back(0.5 * moments[i]);
        f.matrices_.push_back((moments[i + 1] - moments[i]) / (6.0 * h[i]));
    }
    return f;
}

MatrixFunction MatrixFunction::piecewise_polynomial(std::vector<double> breaks,
                                                    std::vector<std::vector<Matrix>> pieces) {
    if (breaks.size() < 2 || pieces.size() + 1 != breaks.size()) {
        throw std::invalid_argument("piecewise descriptor needs k+1 breakpoints for k pieces");
    }
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        if (!(breaks[i - 1] < breaks[i])) {
            throw std::invalid_argument("piecewise breakpoints must be strictly increasing");
        }
    }
    if (pieces[0].empty()) throw std::invalid_argument("piecewise pieces need coefficients");
    const Eigen::Index rows = pieces[0][0].rows(), cols = pieces[0][0].cols();
    for (const auto& piece : pieces) {
        for (const Matrix& c : piece) {
            if (c.rows() != rows || c.cols() != cols) {
                throw std::invalid_argument("piecewise coefficients must share one shape");
            }
        }
    }
    MatrixFunction f;
    f.kind_ = Kind::Piecewise;
    f.rows_ = rows;
    f.cols_ = cols;
    f.points_ = std::move(breaks);
    f.pieces_ = std::move(pieces);
    return f;
}

MatrixFunction MatrixFunction::combination(Complex wf, MatrixFunction f, Complex wg,
                                           MatrixFunction g) {
    if (f.rows() != g.rows() || f.cols() != g.cols()) {
        throw std::invalid_argument("combination parts must share one shape");
    }
    MatrixFunction out;
    out.kind_ = Kind::Combination;
    out.rows_ = f.rows();
    out.cols_ = f.cols();
    out.parts_.emplace_back(wf, std::move(f));
    out.parts_.emplace_back(wg, std::move(g));
    return out;
}

int MatrixFunction::max_derivative_order() const {
    switch (kind_) {
        case Kind::Constant:
        case Kind::Polynomial:
        case Kind::Piecewise:
            return kUnboundedDerivatives;
        case Kind::Sampled:
            return 2;
        case Kind::Combination: {
            int cap = kUnboundedDerivatives;
            for (const auto& [w, part] : parts_) cap = std::min(cap, part.max_derivative_order());
            return cap;
        }
    }
    return 0;
}

namespace {

Matrix eval_poly_in(const std::vector<Matrix>& coeffs, double t, int derivative,
                    Eigen::Index rows, Eigen::Index cols) {
    Matrix out = Matrix::Zero(rows, cols);
    double tp = 1.0;
    for (std::size_t k = derivative; k < coeffs.size(); ++k) {
        double scale = 1.0;
        for (int j = 0; j < derivative; ++j) scale *= static_cast<double>(k - j);
        out += (scale * tp) * coeffs[k];
        tp *= t;
    }
    return out;
}

}  // namespace

Matrix MatrixFunction::eval(double t, int derivative) const {
    if (derivative < 0) throw std::invalid_argument("derivative order must be nonnegative");
    if (derivative > max_derivative_order()) {
        throw NumericsError("insufficient smoothness: descriptor does not evaluate derivative order " +
                            std::to_string(derivative));
    }
    switch (kind_) {
        case Kind::Constant:
            return derivative == 0 ? matrices_[0] : Matrix::Zero(rows_, cols_);
        case Kind::Polynomial:
            return eval_poly_in(matrices_, t, derivative, rows_, cols_);
        case Kind::Sampled:
            return eval_spline(t, derivative);
        case Kind::Piecewise:
            return eval_piece(t, derivative);
        case Kind::Combination: {
            Matrix out = parts_[0].first * parts_[0].second.eval(t, derivative);
            for (std::size_t i = 1; i < parts_.size(); ++i) {
                out += parts_[i].first * parts_[i].second.eval(t, derivative);
            }
            return out;
        }
    }
    return Matrix::Zero(rows_, cols_);
}

Matrix MatrixFunction::eval_spline(double t, int derivative) const {
    const std::ptrdiff_t K = static_cast<std::ptrdiff_t>(points_.size()) - 1;
    auto it = std::upper_bound(points_.begin() + 1, points_.end(), t);
    std::ptrdiff_t i = std::clamp<std::ptrdiff_t>((it - points_.begin()) - 1, 0, K - 1);
    const double u = t - points_[i];
    const Matrix* c = &matrices_[4 * i];
    switch (derivative) {
        case 0: return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
        case 1: return c[1] + u * (2.0 * c[2] + 3.0 * u * c[3]);
        case 2: return 2.0 * c[2] + 6.0 * u * c[3];
        default: return Matrix::Zero(rows_, cols_);
    }
}

Matrix MatrixFunction::eval_piece(double t, int derivative) const {
    const std::ptrdiff_t K = static_cast<std::ptrdiff_t>(pieces_.size());
    auto it = std::upper_bound(points_.begin() + 1, points_.end(), t);
    std::ptrdiff_t i = std::clamp<std::ptrdiff_t>((it - points_.begin()) - 1, 0, K - 1);
    return eval_poly_in(pieces_[i], t, derivative, rows_, cols_);
}

MatrixFunction MatrixFunction::premultiplied(const Matrix& lhs) const {
    if (lhs.cols() != rows_) throw std::invalid_argument("premultiplier shape mismatch");
    MatrixFunction out = *this;
    out.rows_ = lhs.rows();
    for (Matrix& m : out.matrices_) m = lhs * m;
    for (auto& piece : out.pieces_) {
        for (Matrix& m : piece) m = lhs * m;
    }
    for (auto& [w, part] : out.parts_) part = part.premultiplied(lhs);
    return out;
}

}  // namespace bvp
