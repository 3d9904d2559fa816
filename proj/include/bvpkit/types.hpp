#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace bvp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Lebesgue exponent admitted by the norm machinery.
enum class Lp { One, Two, Inf };

std::string to_string(Lp p);

/// An input file or problem description violates the schema or shape rules.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical operation cannot proceed: insufficient jet, insufficient
/// smoothness, degenerate family, or a failed consistency requirement.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

/// Shape of a boundary value problem for a system of m unknowns:
/// differential order r, smoothness index n (solutions carry n+r derivatives),
/// l scalar boundary conditions, norms taken in L_p.
struct ProblemDims {
    int m = 1;
    int r = 1;
    int n = 0;
    int l = 1;
    Lp p = Lp::Two;

    /// Number of derivative orders carried by a solution jet (0 .. n+r).
    int jet_order() const { return n + r; }

    /// Dimension of the equivalent first-order system, m*r.
    int companion_dim() const { return m * r; }
};

struct Interval {
    double a = 0.0;
    double b = 1.0;

    double length() const { return b - a; }
};

}  // namespace bvp
