#include <array>
#include <cmath>

#include "bvpkit/odeint.hpp"

namespace bvp {

namespace {

// Backward-error bounds theta_m for the diagonal Pade approximant of degree m
// in double precision (Higham, SIAM J. Matrix Anal. Appl. 26(4), 2005).
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

// Solves (-U + V) X = (U + V), the [m/m] Pade evaluation step.
Matrix pade_solve(const Matrix& U, const Matrix& V) {
    return (V - U).partialPivLu().solve(V + U);
}

template <std::size_t N>
Matrix pade_low(const Matrix& A, const std::array<double, N>& b) {
    const Eigen::Index m = A.rows();
    const Matrix I = Matrix::Identity(m, m);
    const Matrix A2 = A * A;
    Matrix even = b[0] * I;
    Matrix odd = b[1] * I;
    Matrix power = I;
    for (std::size_t k = 2; k < N; k += 2) {
        power = power * A2;
        even += b[k] * power;
        if (k + 1 < N) odd += b[k + 1] * power;
    }
    return pade_solve(A * odd, even);
}

Matrix pade13(const Matrix& A) {
    static constexpr std::array<double, 14> b = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};
    const Eigen::Index m = A.rows();
    const Matrix I = Matrix::Identity(m, m);
    const Matrix A2 = A * A;
    const Matrix A4 = A2 * A2;
    const Matrix A6 = A2 * A4;
    const Matrix U =
        A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 +
             b[1] * I);
    const Matrix V =
        A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
    return pade_solve(U, V);
}

}  // namespace

Matrix matrix_exponential(const Matrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("matrix exponential needs a square matrix");
    if (A.rows() == 0) return Matrix(0, 0);

    const double norm = A.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
    if (norm <= kTheta3) {
        return pade_low(A, std::array<double, 4>{120.0, 60.0, 12.0, 1.0});
    }
    if (norm <= kTheta5) {
        return pade_low(A, std::array<double, 6>{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0});
    }
    if (norm <= kTheta7) {
        return pade_low(A, std::array<double, 8>{17297280.0, 8648640.0, 1995840.0, 277200.0,
                                                 25200.0, 1512.0, 56.0, 1.0});
    }
    if (norm <= kTheta9) {
        return pade_low(A, std::array<double, 10>{17643225600.0, 8821612800.0, 2075673600.0,
                                                  302702400.0, 30270240.0, 2162160.0, 110880.0,
                                                  3960.0, 90.0, 1.0});
    }
    const int s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    Matrix X = pade13(A / std::pow(2.0, s));
    for (int i = 0; i < s; ++i) X = X * X;
    return X;
}

}  // namespace bvp
