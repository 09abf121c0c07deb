#include "avelab/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "avelab/errors.hpp"

namespace avelab::report {

Json to_json(const Matrix& a) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return {{"n", a.rows()}, {"rows", std::move(rows)}};
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

Json to_json(const Signature& s) { return s.to_string(); }

Json to_json(const Tolerances& tol) {
    return {{"residual", tol.residual}, {"im", tol.im},         {"nonneg", tol.nonneg}, {"boundary", tol.boundary},
            {"dedupe", tol.dedupe},     {"sing", tol.sing}, {"max_n", tol.max_n}};
}

Json to_json(const spectrum::AligningPair& p) {
    return {{"lambda", p.lambda},
            {"signature", to_json(p.signature)},
            {"eigvec", to_json(p.eigvec)},
            {"aligning_vector", to_json(p.aligning_vector)},
            {"interior", p.interior},
            {"simple_ev", p.simple_ev}};
}

Json to_json(const spectrum::AligningSpectrum& s, const Tolerances& tol) {
    Json pairs = Json::array();
    for (const auto& p : s.pairs) pairs.push_back(to_json(p));
    return {{"values", spectrum::aligning_values(s, tol)},
            {"pairs", std::move(pairs)},
            {"deduped", s.deduped},
            {"inconclusive", s.inconclusive}};
}

Json to_json(const spectrum::SimplicityReport& r) {
    Json reasons = Json::array();
    for (auto reason : r.reasons) reasons.push_back(spectrum::to_string(reason));
    return {{"is_simple", r.is_simple}, {"reasons", std::move(reasons)}};
}

Json to_json(const ave::AveSolution& s) {
    Json sigs = Json::array();
    for (const auto& sig : s.signatures) sigs.push_back(to_json(sig));
    return {{"z", to_json(s.z)},
            {"signatures", std::move(sigs)},
            {"on_boundary", s.on_boundary},
            {"orientation", s.orientation}};
}

Json to_json(const ave::SolveReport& r) {
    Json sols = Json::array();
    for (const auto& s : r.solutions) sols.push_back(to_json(s));
    Json singular = Json::array();
    for (const auto& s : r.singular_orthants) singular.push_back(to_json(s));
    Json continuum = Json::array();
    for (const auto& s : r.continuum_orthants) continuum.push_back(to_json(s));
    return {{"solutions", std::move(sols)},
            {"count", r.solutions.size()},
            {"orientation_sum", r.orientation_sum()},
            {"b_regular", r.b_regular},
            {"continuum", r.continuum()},
            {"singular_orthants", std::move(singular)},
            {"continuum_orthants", std::move(continuum)}};
}

Json to_json(const ave::DegreeReport& r) {
    return {{"degree", r.degree ? Json(*r.degree) : Json(nullptr)},
            {"failure", r.failure},
            {"trials_used", r.trials_used},
            {"trials_rejected", r.trials_rejected},
            {"trial_degrees", r.trial_degrees},
            {"max_preimages", r.max_preimages},
            {"seed", r.seed}};
}

Json to_json(const homotopy::PropernessBreakpoints& p) {
    return {{"breakpoints", p.breakpoints}, {"has_zero_aligning_value", p.has_zero_aligning_value}};
}

Json to_json(const homotopy::ProfilePoint& p) {
    return {{"t", p.t}, {"degree", p.degree ? Json(*p.degree) : Json(nullptr)}, {"failure", p.failure}};
}

Json to_json(const lcp::QCheckReport& r) {
    return {{"verdict", lcp::to_string(r.verdict)},
            {"method", lcp::to_string(r.method)},
            {"counterexample_q", r.counterexample_q ? to_json(*r.counterexample_q) : Json(nullptr)},
            {"samples", r.samples}};
}

Json to_json(const compare::MaxMinResult& r) {
    return {{"value", r.value},
            {"argmax", to_json(r.argmax)},
            {"restricted_nonneg", r.restricted_nonneg},
            {"iterations", r.trace.iterations},
            {"best_so_far", r.trace.best_so_far}};
}

Json to_json(const compare::CoincidenceReport& r) {
    return {{"rho_a", r.rho_a},
            {"rho_R", r.rho_R},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"rhs_interior", r.rhs_interior},
            {"coincide_spectra", r.coincide_spectra},
            {"coincide_functionals", r.coincide_functionals}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
        throw InvalidInput("matrix file must be an object with \"n\" and \"rows\"");
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
        throw InvalidInput("\"n\" must be a positive integer");
    }
    const auto n = j["n"].get<Eigen::Index>();
    const Json& rows = j["rows"];
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
        throw InvalidInput("\"rows\" must hold exactly n rows");
    }
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw InvalidInput("row " + std::to_string(i) + " must hold exactly n numbers");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            const Json& x = row[static_cast<std::size_t>(k)];
            if (!x.is_number()) throw InvalidInput("matrix entries must be numbers");
            a(i, k) = x.get<double>();
            if (!std::isfinite(a(i, k))) throw InvalidInput("matrix entries must be finite");
        }
    }
    return a;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open matrix file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
    return matrix_from_json(j);
}

Vector parse_vector(std::string_view text) {
    std::string body(text);
    if (!body.empty() && body.front() != '[') body = "[" + body + "]";
    Json j;
    try {
        j = Json::parse(body);
    } catch (const nlohmann::json::parse_error&) {
        throw InvalidInput("cannot parse vector '" + std::string(text) + "'");
    }
    if (!j.is_array() || j.empty()) throw InvalidInput("vector must be a nonempty list of numbers");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw InvalidInput("vector entries must be numbers");
        v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
        if (!std::isfinite(v[static_cast<Eigen::Index>(i)])) throw InvalidInput("vector entries must be finite");
    }
    return v;
}

Json envelope(std::string_view command, Json inputs, const Tolerances& tol, std::uint64_t seed, Json results,
              const std::vector<std::string>& warnings) {
    return {{"schema", kSchema},         {"command", command}, {"inputs", std::move(inputs)},
            {"tolerances", to_json(tol)}, {"seed", seed},       {"results", std::move(results)},
            {"warnings", warnings}};
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace avelab::report
