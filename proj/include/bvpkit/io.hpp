#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bvpkit/continuity.hpp"
#include "bvpkit/problem.hpp"
#include "bvpkit/solver.hpp"

namespace bvp {

/// Parses a problem description; schema violations raise SchemaError naming
/// the offending key. Expected shape:
/// {
///   "interval": [a, b],
///   "dims": {"m":…, "r":…, "n":…, "l":…, "p": 1 | 2 | "inf"},
///   "coefficients": [{"order": k, "kind": …, "data": …}, …],
///   "rhs": {"kind": …, "data": …},
///   "boundary": {"alphas": [matrix, …], "phi": descriptor | null},
///   "c": [complex, …]
/// }
/// Complex scalars are numbers (imaginary part zero) or [re, im] pairs.
/// Descriptor kinds: "constant" (data = matrix), "polynomial" (data = list of
/// matrices, ascending powers), "sampled" (data = {"points": […],
/// "values": [matrix, …]}).
BVProblem problem_from_json(const nlohmann::json& j);
BVProblem load_problem(const std::string& path);

/// Family description: {"base": problem, "perturbations": {"coefficients":
/// [{"order": k, …descriptor…}, …], "alphas": [matrix, …], "phi": descriptor,
/// "rhs": descriptor, "c": [complex, …]}, "schedule": [eps, …] |
/// {"start": …, "factor": …, "count": …}}. All perturbation keys optional.
ProblemFamily family_from_json(const nlohmann::json& j);
ProblemFamily load_family(const std::string& path);

/// Scientific notation with 17 significant digits, locale independent.
std::string format_sci(double x);

/// Complex matrix as CSV with interleaved _re/_im columns.
void write_matrix_csv(std::ostream& os, const Matrix& m);

/// Trajectory as CSV: node abscissa, then per derivative order and component
/// interleaved real and imaginary parts.
void write_trajectory_csv(std::ostream& os, const Trajectory& y);

/// One row per scheduled eps with distances, Fredholm numbers, status, error,
/// discrepancy, and ratio.
void write_continuity_csv(std::ostream& os, const ContinuityReport& report);

}  // namespace bvp
