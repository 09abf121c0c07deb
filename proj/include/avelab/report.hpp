#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "avelab/ave.hpp"
#include "avelab/compare.hpp"
#include "avelab/homotopy.hpp"
#include "avelab/lcp.hpp"
#include "avelab/linalg.hpp"
#include "avelab/signatures.hpp"
#include "avelab/spectrum.hpp"

// JSON serialization shared by the CLI and the bench suites. Doubles are written
// in shortest round-trip form, so parsing a report back yields the same bits.
namespace avelab::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "ave-lab/1";

Json to_json(const Matrix& a);
Json to_json(const Vector& v);
Json to_json(const Signature& s);
Json to_json(const Tolerances& tol);
Json to_json(const spectrum::AligningPair& p);
Json to_json(const spectrum::AligningSpectrum& s, const Tolerances& tol);
Json to_json(const spectrum::SimplicityReport& r);
Json to_json(const ave::AveSolution& s);
Json to_json(const ave::SolveReport& r);
Json to_json(const ave::DegreeReport& r);
Json to_json(const homotopy::PropernessBreakpoints& p);
Json to_json(const homotopy::ProfilePoint& p);
Json to_json(const lcp::QCheckReport& r);
Json to_json(const compare::MaxMinResult& r);
Json to_json(const compare::CoincidenceReport& r);

/// Parses {"n": int, "rows": [[...], ...]}; throws InvalidInput on any shape or value problem.
Matrix matrix_from_json(const Json& j);
Matrix read_matrix_file(const std::string& path);
/// Accepts a JSON array of numbers or a comma-separated list.
Vector parse_vector(std::string_view text);

/// The common envelope: schema, command, inputs, tolerances, seed, results, warnings.
Json envelope(std::string_view command, Json inputs, const Tolerances& tol, std::uint64_t seed, Json results,
              const std::vector<std::string>& warnings);

std::string dump(const Json& j);

}  // namespace avelab::report
