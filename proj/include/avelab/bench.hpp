#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avelab/linalg.hpp"
#include "avelab/report.hpp"

namespace avelab::bench {

enum class Family {
    gaussian,         // iid N(0, 1) entries
    nonneg,           // iid U[0, 1) entries
    positive_simple,  // U(0, 1] entries scaled to Perron root `target` (default 1.2), simple with lambda_2 < 1
    scaled_to_rho_a,  // N(0, 1) entries scaled so that rho_a equals `target`
};

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct FamilySpec {
    Family kind = Family::gaussian;
    int n = 2;
    int count = 1;
    std::optional<double> target;
    std::uint64_t seed = 42;
    /// Rejected draws tolerated before generate() gives up.
    int skip_budget = 10000;
};

struct Generated {
    std::vector<Matrix> matrices;
    /// Draws discarded by the family's filter (rho_a too small, not simple, ...).
    int rejected = 0;
};

/// Deterministic in `spec`. Throws NumericFailure when the skip budget runs out.
Generated generate(const FamilySpec& spec, const Tolerances& tol = {});

/// Perron root of an entrywise nonnegative matrix by power iteration on A + I,
/// stopped when the Collatz-Wielandt bounds agree to `rel_tol`.
double perron_root(const Matrix& a, double rel_tol = 1e-14, int max_iterations = 200000);

enum class Status { pass, fail, skip };
std::string_view to_string(Status s);

struct Outcome {
    Status status = Status::skip;
    report::Json detail;
};

struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    int generator_rejections = 0;
    /// Each entry holds the replayable "instance" and the check's "detail".
    std::vector<report::Json> failures;

    bool ok() const { return failed == 0 && passed > 0; }
    report::Json to_json() const;
};

/// odd-count, mod2-switch, perron-coincide, degree-winding, q-matrix, pointed, ker-im.
const std::vector<std::string>& suite_names();

/// Generates the suite's instances from `seed`, checks each one and aggregates.
SuiteReport run_suite(std::string_view name, std::uint64_t seed = 42, const Tolerances& tol = {});

/// Re-runs the check for one instance (as stored in SuiteReport::failures) and returns its outcome.
Outcome check_instance(const report::Json& instance, const Tolerances& tol = {});

}  // namespace avelab::bench
