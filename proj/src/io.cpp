#include "bvpkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace bvp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw SchemaError(path + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing required key");
    return *it;
}

int parse_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

double parse_real(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

Complex parse_complex(const json& j, const std::string& path) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Complex(j[0].get<double>(), j[1].get<double>());
    }
    fail(path, "expected a number or [re, im] pair");
}

Matrix parse_matrix(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) fail(path + "[0]", "expected a nonempty row array");
    const std::size_t cols = j[0].size();
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != cols) fail(row_path, "row length mismatch");
        for (std::size_t k = 0; k < cols; ++k) {
            out(i, k) = parse_complex(row[k], row_path + "[" + std::to_string(k) + "]");
        }
    }
    return out;
}

Vector parse_vector(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    Vector out(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out(i) = parse_complex(j[i], path + "[" + std::to_string(i) + "]");
    }
    return out;
}

MatrixFunction parse_descriptor(const json& j, const std::string& path) {
    const json& kind = require(j, "kind", path);
    if (!kind.is_string()) fail(path + ".kind", "expected a string");
    const std::string k = kind.get<std::string>();
    const json& data = require(j, "data", path);
    if (k == "constant") {
        return MatrixFunction::constant(parse_matrix(data, path + ".data"));
    }
    if (k == "polynomial") {
        if (!data.is_array() || data.empty()) {
            fail(path + ".data", "expected a nonempty array of coefficient matrices");
        }
        std::vector<Matrix> coeffs;
        for (std::size_t i = 0; i < data.size(); ++i) {
            coeffs.push_back(parse_matrix(data[i], path + ".data[" + std::to_string(i) + "]"));
        }
        return MatrixFunction::polynomial(std::move(coeffs));
    }
    if (k == "sampled") {
        const json& pts = require(data, "points", path + ".data");
        const json& vals = require(data, "values", path + ".data");
        if (!pts.is_array() || pts.size() < 2) {
            fail(path + ".data.points", "expected at least two sample points");
        }
        if (!vals.is_array() || vals.size() != pts.size()) {
            fail(path + ".data.values", "expected one matrix per sample point");
        }
        std::vector<double> points;
        std::vector<Matrix> values;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            points.push_back(parse_real(pts[i], path + ".data.points[" + std::to_string(i) + "]"));
            values.push_back(parse_matrix(vals[i], path + ".data.values[" + std::to_string(i) + "]"));
        }
        try {
            return MatrixFunction::sampled(std::move(points), std::move(values));
        } catch (const std::invalid_argument& e) {
            fail(path + ".data", e.what());
        }
    }
    fail(path + ".kind", "unknown kind \"" + k + "\" (use constant, polynomial, or sampled)");
}

Lp parse_p(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        const int v = j.get<int>();
        if (v == 1) return Lp::One;
        if (v == 2) return Lp::Two;
        fail(path, "expected 1, 2, or \"inf\"");
    }
    if (j.is_string() && j.get<std::string>() == "inf") return Lp::Inf;
    fail(path, "expected 1, 2, or \"inf\"");
}

Interval parse_interval(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [a, b]");
    Interval iv{parse_real(j[0], path + "[0]"), parse_real(j[1], path + "[1]")};
    if (!(iv.a < iv.b) || !std::isfinite(iv.a) || !std::isfinite(iv.b)) {
        fail(path, "interval endpoints must be finite with a < b");
    }
    return iv;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path + ": cannot open file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return j;
}

}  // namespace

BVProblem problem_from_json(const json& j) {
    BVProblem p;
    p.interval = parse_interval(require(j, "interval", "problem"), "problem.interval");

    const json& dims = require(j, "dims", "problem");
    p.dims.m = parse_int(require(dims, "m", "problem.dims"), "problem.dims.m");
    p.dims.r = parse_int(require(dims, "r", "problem.dims"), "problem.dims.r");
    p.dims.n = parse_int(require(dims, "n", "problem.dims"), "problem.dims.n");
    p.dims.l = parse_int(require(dims, "l", "problem.dims"), "problem.dims.l");
    p.dims.p = parse_p(require(dims, "p", "problem.dims"), "problem.dims.p");
    if (p.dims.m < 1 || p.dims.r < 1 || p.dims.n < 0 || p.dims.l < 1) {
        fail("problem.dims", "m, r, l must be positive and n nonnegative");
    }

    const json& coeffs = require(j, "coefficients", "problem");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != p.dims.r) {
        fail("problem.coefficients", "expected an array of r entries");
    }
    p.coefficients.assign(p.dims.r, MatrixFunction::zero(p.dims.m, p.dims.m));
    std::vector<bool> seen(p.dims.r, false);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::string path = "problem.coefficients[" + std::to_string(i) + "]";
        const int order = parse_int(require(coeffs[i], "order", path), path + ".order");
        if (order < 0 || order >= p.dims.r) fail(path + ".order", "expected 0 <= order < r");
        if (seen[order]) fail(path + ".order", "duplicate coefficient order");
        seen[order] = true;
        p.coefficients[order] = parse_descriptor(coeffs[i], path);
    }

    p.rhs = parse_descriptor(require(j, "rhs", "problem"), "problem.rhs");

    const json& boundary = require(j, "boundary", "problem");
    const json& alphas = require(boundary, "alphas", "problem.boundary");
    if (!alphas.is_array() || static_cast<int>(alphas.size()) != p.dims.jet_order()) {
        fail("problem.boundary.alphas", "expected n + r matrices");
    }
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        p.boundary.alphas.push_back(
            parse_matrix(alphas[k], "problem.boundary.alphas[" + std::to_string(k) + "]"));
    }
    const json& phi = require(boundary, "phi", "problem.boundary");
    if (!phi.is_null()) {
        p.boundary.phi = parse_descriptor(phi, "problem.boundary.phi");
    }

    p.c = parse_vector(require(j, "c", "problem"), "problem.c");

    const ValidationReport report = validate(p);
    if (!report.ok()) {
        std::string msg = "problem validation failed:";
        for (const std::string& v : report.violations) msg += "\n  - " + v;
        throw SchemaError(msg);
    }
    return p;
}

BVProblem load_problem(const std::string& path) { return problem_from_json(load_json(path)); }

ProblemFamily family_from_json(const json& j) {
    ProblemFamily family;
    family.base = problem_from_json(require(j, "base", "family"));
    const ProblemDims& d = family.base.dims;

    if (auto it = j.find("perturbations"); it != j.end() && !it->is_null()) {
        const json& pert = *it;
        if (!pert.is_object()) fail("family.perturbations", "expected an object");
        if (auto c = pert.find("coefficients"); c != pert.end() && !c->is_null()) {
            if (!c->is_array()) fail("family.perturbations.coefficients", "expected an array");
            family.coefficient_deltas.assign(d.r, std::nullopt);
            for (std::size_t i = 0; i < c->size(); ++i) {
                const std::string path =
                    "family.perturbations.coefficients[" + std::to_string(i) + "]";
                const int order = parse_int(require((*c)[i], "order", path), path + ".order");
                if (order < 0 || order >= d.r) fail(path + ".order", "expected 0 <= order < r");
                MatrixFunction delta = parse_descriptor((*c)[i], path);
                if (delta.rows() != d.m || delta.cols() != d.m) {
                    fail(path, "perturbation shape must be m x m");
                }
                family.coefficient_deltas[order] = std::move(delta);
            }
        }
        if (auto a = pert.find("alphas"); a != pert.end() && !a->is_null()) {
            if (!a->is_array() || static_cast<int>(a->size()) != d.jet_order()) {
                fail("family.perturbations.alphas", "expected n + r matrices");
            }
            for (std::size_t k = 0; k < a->size(); ++k) {
                Matrix delta =
                    parse_matrix((*a)[k], "family.perturbations.alphas[" + std::to_string(k) + "]");
                if (delta.rows() != d.l || delta.cols() != d.m) {
                    fail("family.perturbations.alphas[" + std::to_string(k) + "]",
                         "perturbation shape must be l x m");
                }
                family.alpha_deltas.push_back(std::move(delta));
            }
        }
        if (auto f = pert.find("phi"); f != pert.end() && !f->is_null()) {
            MatrixFunction delta = parse_descriptor(*f, "family.perturbations.phi");
            if (delta.rows() != d.l || delta.cols() != d.m) {
                fail("family.perturbations.phi", "perturbation shape must be l x m");
            }
            family.phi_delta = std::move(delta);
        }
        if (auto f = pert.find("rhs"); f != pert.end() && !f->is_null()) {
            MatrixFunction delta = parse_descriptor(*f, "family.perturbations.rhs");
            if (delta.rows() != d.m || delta.cols() != 1) {
                fail("family.perturbations.rhs", "perturbation shape must be m x 1");
            }
            family.rhs_delta = std::move(delta);
        }
        if (auto f = pert.find("c"); f != pert.end() && !f->is_null()) {
            Vector delta = parse_vector(*f, "family.perturbations.c");
            if (delta.size() != d.l) fail("family.perturbations.c", "expected l entries");
            family.c_delta = std::move(delta);
        }
    }

    const json& schedule = require(j, "schedule", "family");
    if (schedule.is_array()) {
        for (std::size_t i = 0; i < schedule.size(); ++i) {
            family.schedule.push_back(
                parse_real(schedule[i], "family.schedule[" + std::to_string(i) + "]"));
        }
    } else if (schedule.is_object()) {
        const double start = parse_real(require(schedule, "start", "family.schedule"),
                                        "family.schedule.start");
        const double factor = parse_real(require(schedule, "factor", "family.schedule"),
                                         "family.schedule.factor");
        const int count =
            parse_int(require(schedule, "count", "family.schedule"), "family.schedule.count");
        if (!(start > 0.0) || !(factor > 0.0) || factor >= 1.0 || count < 1) {
            fail("family.schedule", "expected start > 0, 0 < factor < 1, count >= 1");
        }
        double eps = start;
        for (int i = 0; i < count; ++i, eps *= factor) family.schedule.push_back(eps);
    } else {
        fail("family.schedule", "expected an array or {start, factor, count}");
    }
    if (family.schedule.empty()) fail("family.schedule", "schedule is empty");
    for (double eps : family.schedule) {
        if (!(eps > 0.0) || !std::isfinite(eps)) {
            fail("family.schedule", "entries must be positive and finite");
        }
    }
    return family;
}

ProblemFamily load_family(const std::string& path) { return family_from_json(load_json(path)); }

std::string format_sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
        os << (k == 0 ? "" : ",") << "c" << k << "_re,c" << k << "_im";
    }
    os << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            os << (k == 0 ? "" : ",") << format_sci(m(i, k).real()) << ","
               << format_sci(m(i, k).imag());
        }
        os << "\n";
    }
}

void write_trajectory_csv(std::ostream& os, const Trajectory& y) {
    os << "t";
    for (int k = 0; k <= y.max_order(); ++k) {
        for (Eigen::Index i = 0; i < y.rows(); ++i) {
            for (Eigen::Index c = 0; c < y.cols(); ++c) {
                os << ",d" << k << "_" << i;
                if (y.cols() > 1) os << "_" << c;
                os << "_re,d" << k << "_" << i;
                if (y.cols() > 1) os << "_" << c;
                os << "_im";
            }
        }
    }
    os << "\n";
    for (int node = 0; node < y.grid().num_points(); ++node) {
        os << format_sci(y.grid().point(node));
        for (int k = 0; k <= y.max_order(); ++k) {
            for (Eigen::Index i = 0; i < y.rows(); ++i) {
                for (Eigen::Index c = 0; c < y.cols(); ++c) {
                    const Complex v = y.value(k, node)(i, c);
                    os << "," << format_sci(v.real()) << "," << format_sci(v.imag());
                }
            }
        }
        os << "\n";
    }
}

void write_continuity_csv(std::ostream& os, const ContinuityReport& report) {
    os << "eps,matrix_distance,dim_ker,dim_coker,index,status,error,discrepancy,ratio\n";
    for (const ContinuityEntry& e : report.entries) {
        os << format_sci(e.eps) << "," << format_sci(e.matrix_distance) << "," << e.fredholm.dim_ker
           << "," << e.fredholm.dim_coker << "," << e.fredholm.index << "," << to_string(e.status)
           << "," << format_sci(e.error) << "," << format_sci(e.discrepancy) << ","
           << format_sci(e.ratio) << "\n";
    }
}

}  // namespace bvp
