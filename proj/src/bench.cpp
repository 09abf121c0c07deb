#include "avelab/bench.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "avelab/ave.hpp"
#include "avelab/errors.hpp"
#include "avelab/homotopy.hpp"
#include "avelab/lcp.hpp"
#include "avelab/spectrum.hpp"

namespace avelab::bench {

using report::Json;

std::string_view to_string(Family f) {
    switch (f) {
        case Family::gaussian: return "gaussian";
        case Family::nonneg: return "nonneg";
        case Family::positive_simple: return "positive_simple";
        case Family::scaled_to_rho_a: return "scaled_to_rho_a";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::gaussian, Family::nonneg, Family::positive_simple, Family::scaled_to_rho_a}) {
        if (to_string(f) == name) return f;
    }
    throw InvalidInput("unknown matrix family '" + std::string(name) + "'");
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
    }
    return "unknown";
}

double perron_root(const Matrix& a, double rel_tol, int max_iterations) {
    linalg::require_square(a);
    if (a.minCoeff() < 0.0) throw InvalidInput("Perron root needs an entrywise nonnegative matrix");
    const Eigen::Index n = a.rows();
    // The shift by I makes the iteration primitive-safe without moving the eigenvector.
    const Matrix shifted = a + Matrix::Identity(n, n);
    Vector x = Vector::Ones(n);
    for (int k = 0; k < max_iterations; ++k) {
        const Vector y = shifted * x;
        const Vector ratio = y.cwiseQuotient(x);
        const double lo = ratio.minCoeff();
        const double hi = ratio.maxCoeff();
        if (hi - lo <= rel_tol * hi) return 0.5 * (lo + hi) - 1.0;
        x = y / y.maxCoeff();
    }
    throw NumericFailure("power iteration did not converge");
}

namespace {

Vector vector_from_json(const Json& j) {
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    return v;
}

std::uint64_t sub_seed(std::uint64_t seed, int n) { return seed + 7919ULL * static_cast<std::uint64_t>(n); }

class Drawer {
public:
    explicit Drawer(std::uint64_t seed) : rng_(seed) {}

    Matrix gaussian(int n) {
        Matrix a(n, n);
        for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal_(rng_);
        return a;
    }
    Matrix uniform(int n) {
        Matrix a(n, n);
        for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = uniform_(rng_);
        return a;
    }
    double normal() { return normal_(rng_); }
    double uniform() { return uniform_(rng_); }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

bool certified_simple_switch(const Matrix& a, const Tolerances& tol) {
    const auto spec = spectrum::aligning_spectrum(a, tol);
    if (!spectrum::simplicity(spec, tol).is_simple) return false;
    const auto values = spectrum::aligning_values(spec, tol);
    return values.front() > 1.0 + tol.dedupe && (values.size() < 2 || values[1] < 1.0 - tol.dedupe);
}

}  // namespace

Generated generate(const FamilySpec& spec, const Tolerances& tol) {
    if (spec.n < 1 || spec.count < 1) throw InvalidInput("family needs n >= 1 and count >= 1");
    if (spec.kind == Family::scaled_to_rho_a && !(spec.target && *spec.target > 0.0)) {
        throw InvalidInput("scaled_to_rho_a needs a positive target");
    }
    Drawer draw(spec.seed);
    Generated out;
    const auto reject = [&] {
        if (++out.rejected > spec.skip_budget) {
            throw NumericFailure("skip budget exhausted generating family " + std::string(to_string(spec.kind)));
        }
    };
    while (static_cast<int>(out.matrices.size()) < spec.count) {
        switch (spec.kind) {
            case Family::gaussian: out.matrices.push_back(draw.gaussian(spec.n)); break;
            case Family::nonneg: out.matrices.push_back(draw.uniform(spec.n)); break;
            case Family::positive_simple: {
                const Matrix a = (1.0 - draw.uniform(spec.n).array()).matrix();
                const Matrix scaled = a * (spec.target.value_or(1.2) / perron_root(a));
                if (certified_simple_switch(scaled, tol)) {
                    out.matrices.push_back(scaled);
                } else {
                    reject();
                }
                break;
            }
            case Family::scaled_to_rho_a: {
                const Matrix a = draw.gaussian(spec.n);
                const double r = spectrum::rho_a(a, tol);
                if (r < 1e-8) {
                    reject();
                } else {
                    out.matrices.push_back(a * (*spec.target / r));
                }
                break;
            }
        }
    }
    return out;
}

namespace {

Outcome check_odd_count(const Json& inst, const Tolerances& tol) {
    const Matrix a = report::matrix_from_json(inst["matrix"]);
    const Vector b = vector_from_json(inst["b"]);
    const auto solved = ave::solve_all(a, b, tol);
    Json detail = {{"count", solved.solutions.size()}, {"orientation_sum", solved.orientation_sum()},
                   {"b_regular", solved.b_regular}};
    if (!solved.b_regular) return {Status::skip, detail};
    const bool ok = solved.solutions.size() % 2 == 1 && solved.orientation_sum() == 1;
    return {ok ? Status::pass : Status::fail, detail};
}

Outcome check_mod2_switch(const Json& inst, const Tolerances& tol) {
    const Matrix a = report::matrix_from_json(inst["matrix"]);
    if (!certified_simple_switch(a, tol)) return {Status::skip, {{"reason", "hypotheses not certified"}}};
    const auto d = ave::degree(a, tol, {.seed = inst["seed"].get<std::uint64_t>()});
    Json detail = report::to_json(d);
    if (!d.degree) return {Status::fail, detail};
    const bool even = *d.degree % 2 == 0;
    const bool planar_zero = a.rows() != 2 || *d.degree == 0;
    return {even && planar_zero ? Status::pass : Status::fail, detail};
}

Outcome check_perron_coincide(const Json& inst, const Tolerances& tol) {
    const Matrix a = report::matrix_from_json(inst["matrix"]);
    const double perron = perron_root(a);
    const auto cmp = compare::coincidence_report(a, tol);
    const bool ok = std::abs(cmp.rho_a - cmp.rho_R) <= 1e-7 && std::abs(cmp.rho_a - perron) <= 1e-7 &&
                    std::abs(cmp.rho_R - perron) <= 1e-7 && std::abs(cmp.lhs - cmp.rho_R) <= 1e-3 &&
                    std::abs(cmp.rhs - cmp.rho_a) <= 1e-3;
    Json detail = report::to_json(cmp);
    detail["perron_root"] = perron;
    return {ok ? Status::pass : Status::fail, detail};
}

Outcome check_degree_winding(const Json& inst, const Tolerances& tol) {
    const Matrix a = report::matrix_from_json(inst["matrix"]);
    const double t = inst["t"].get<double>();
    const auto d = ave::degree(t * a, tol);
    const auto w = homotopy::winding_number(homotopy::circle_trace(a, t), tol);
    Json detail = {{"degree", d.degree ? Json(*d.degree) : Json(nullptr)},
                   {"winding", w ? Json(*w) : Json(nullptr)}};
    if (!d.degree || !w) return {Status::skip, detail};
    return {*d.degree == *w ? Status::pass : Status::fail, detail};
}

Outcome check_q_matrix(const Json& inst, const Tolerances& tol) {
    const Matrix a = report::matrix_from_json(inst["matrix"]);
    const Signature s = Signature::parse(inst["signature"].get<std::string>());
    const auto reduced = lcp::ave_to_lcp(a, s, Vector::Zero(a.rows()), tol);
    const auto q = lcp::q_check(reduced.M, tol, inst["seed"].get<std::uint64_t>(), inst["samples"].get<int>());
    return {q.verdict == lcp::Verdict::not_Q ? Status::fail : Status::pass, report::to_json(q)};
}

Outcome check_pointed(const Json& inst, const Tolerances& tol) {
    const Matrix a = report::matrix_from_json(inst["matrix"]);
    if (spectrum::is_degenerate(a, tol)) return {Status::skip, {{"reason", "1 is an aligning value"}}};
    Json lines = Json::array();
    for (const Signature s : enumerate_signatures(static_cast<std::size_t>(a.rows()), tol.max_n)) {
        if (ave::orthant_image_degeneracy(a, s, tol).shape == ave::ImageShape::line_detected) {
            lines.push_back(report::to_json(s));
        }
    }
    return {lines.empty() ? Status::pass : Status::fail, {{"line_detected", lines}}};
}

Outcome check_ker_im(const Json& inst, const Tolerances& tol) {
    const Matrix a = report::matrix_from_json(inst["matrix"]);
    const bool trivial = ave::ker_im_intersection_trivial(a, tol);
    return {trivial ? Status::pass : Status::fail, {{"trivial", trivial}}};
}

using Checker = std::function<Outcome(const Json&, const Tolerances&)>;
using Builder = std::function<std::vector<Json>(std::uint64_t, const Tolerances&, int&)>;

struct Suite {
    std::string name;
    Builder build;
    Checker check;
};

Json instance(std::string_view suite, const Matrix& a) { return {{"suite", suite}, {"matrix", report::to_json(a)}}; }

std::vector<Json> build_odd_count(std::uint64_t seed, const Tolerances& tol, int& rejected) {
    std::vector<Json> out;
    Drawer draw(seed);
    for (int n : {2, 3, 4}) {
        const int count = n == 4 ? 66 : 67;
        const auto fam = generate({Family::scaled_to_rho_a, n, count, 0.9, sub_seed(seed, n)}, tol);
        rejected += fam.rejected;
        for (const auto& a : fam.matrices) {
            for (int k = 0; k < 50; ++k) {
                Vector b(n);
                for (int i = 0; i < n; ++i) b[i] = draw.normal();
                b.normalize();
                auto inst = instance("odd-count", a);
                inst["b"] = report::to_json(b);
                out.push_back(std::move(inst));
            }
        }
    }
    return out;
}

std::vector<Json> build_mod2_switch(std::uint64_t seed, const Tolerances& tol, int& rejected) {
    std::vector<Json> out;
    for (int n : {2, 3}) {
        const auto fam = generate({Family::positive_simple, n, 50, 1.2, sub_seed(seed, n)}, tol);
        rejected += fam.rejected;
        for (const auto& a : fam.matrices) {
            auto inst = instance("mod2-switch", a);
            inst["seed"] = seed;
            out.push_back(std::move(inst));
        }
    }
    return out;
}

std::vector<Json> build_perron_coincide(std::uint64_t seed, const Tolerances& tol, int& rejected) {
    std::vector<Json> out;
    for (int n : {2, 3, 4}) {
        const auto fam = generate({Family::nonneg, n, n == 4 ? 16 : 17, std::nullopt, sub_seed(seed, n)}, tol);
        rejected += fam.rejected;
        for (const auto& a : fam.matrices) out.push_back(instance("perron-coincide", a));
    }
    return out;
}

std::vector<Json> build_degree_winding(std::uint64_t seed, const Tolerances& tol, int& rejected) {
    std::vector<Json> out;
    Drawer draw(seed);
    const auto fam = generate({Family::gaussian, 2, 200, std::nullopt, sub_seed(seed, 2)}, tol);
    for (const auto& a : fam.matrices) {
        const auto bp = homotopy::properness_breakpoints(a, tol).breakpoints;
        double t = 0.0;
        do {
            t = 0.05 + 2.95 * draw.uniform();
            ++rejected;
        } while (std::any_of(bp.begin(), bp.end(), [&](double p) { return std::abs(t - p) <= 1e-3; }));
        --rejected;
        auto inst = instance("degree-winding", a);
        inst["t"] = t;
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<Json> build_q_matrix(std::uint64_t seed, const Tolerances& tol, int& rejected) {
    std::vector<Json> out;
    const auto fam = generate({Family::scaled_to_rho_a, 3, 50, 0.9, sub_seed(seed, 3)}, tol);
    rejected += fam.rejected;
    for (const auto& a : fam.matrices) {
        for (const Signature s : enumerate_signatures(3)) {
            if (linalg::det_sign(Matrix::Identity(3, 3) - apply_left(s, a), tol) == 0) {
                ++rejected;
                continue;
            }
            auto inst = instance("q-matrix", a);
            inst["signature"] = s.to_string();
            inst["seed"] = seed;
            inst["samples"] = 500;
            out.push_back(std::move(inst));
        }
    }
    return out;
}

std::vector<Json> build_pointed(std::uint64_t seed, const Tolerances& tol, int& rejected) {
    std::vector<Json> out;
    for (int n : {2, 3}) {
        const auto fam = generate({Family::gaussian, n, 50, std::nullopt, sub_seed(seed, n)}, tol);
        rejected += fam.rejected;
        for (const auto& a : fam.matrices) out.push_back(instance("pointed", a));
    }
    return out;
}

// V diag(1, mu_2, ..., mu_n) V^{-1} with every mu_k at least 0.1 away from 1.
std::vector<Json> build_ker_im(std::uint64_t seed, const Tolerances&, int& rejected) {
    std::vector<Json> out;
    Drawer draw(seed);
    while (out.size() < 50) {
        const int n = 2 + static_cast<int>(out.size() % 3);
        const Matrix v = draw.gaussian(n);
        Eigen::FullPivLU<Matrix> lu(v);
        if (!lu.isInvertible() || lu.rcond() < 1e-3) {
            ++rejected;
            continue;
        }
        Vector mu(n);
        mu[0] = 1.0;
        for (int k = 1; k < n; ++k) {
            do {
                mu[k] = -2.0 + 4.0 * draw.uniform();
            } while (std::abs(mu[k] - 1.0) < 0.1);
        }
        out.push_back(instance("ker-im", Matrix(v * mu.asDiagonal() * lu.inverse())));
    }
    return out;
}

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"odd-count", build_odd_count, check_odd_count},
        {"mod2-switch", build_mod2_switch, check_mod2_switch},
        {"perron-coincide", build_perron_coincide, check_perron_coincide},
        {"degree-winding", build_degree_winding, check_degree_winding},
        {"q-matrix", build_q_matrix, check_q_matrix},
        {"pointed", build_pointed, check_pointed},
        {"ker-im", build_ker_im, check_ker_im},
    };
    return all;
}

const Suite& find_suite(std::string_view name) {
    for (const auto& s : suites()) {
        if (s.name == name) return s;
    }
    throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : suites()) out.push_back(s.name);
        return out;
    }();
    return names;
}

Json SuiteReport::to_json() const {
    return {{"suite", name},
            {"seed", seed},
            {"passed", passed},
            {"failed", failed},
            {"skipped", skipped},
            {"generator_rejections", generator_rejections},
            {"ok", ok()},
            {"failures", failures}};
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, const Tolerances& tol) {
    const Suite& suite = find_suite(name);
    SuiteReport out;
    out.name = suite.name;
    out.seed = seed;
    for (const auto& inst : suite.build(seed, tol, out.generator_rejections)) {
        auto outcome = suite.check(inst, tol);
        switch (outcome.status) {
            case Status::pass: ++out.passed; break;
            case Status::skip: ++out.skipped; break;
            case Status::fail:
                ++out.failed;
                out.failures.push_back({{"instance", inst}, {"detail", std::move(outcome.detail)}});
                break;
        }
    }
    return out;
}

Outcome check_instance(const Json& inst, const Tolerances& tol) {
    if (!inst.is_object() || !inst.contains("suite") || !inst["suite"].is_string()) {
        throw InvalidInput("instance must name its suite");
    }
    return find_suite(inst["suite"].get<std::string>()).check(inst, tol);
}

}  // namespace avelab::bench
