#include "avelab/lcp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "avelab/errors.hpp"

namespace avelab::lcp {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Q: return "Q";
        case Verdict::not_Q: return "not_Q";
        case Verdict::undecided: return "undecided";
    }
    return "unknown";
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::exact_2d: return "exact_2d";
        case Method::sampling: return "sampling";
    }
    return "unknown";
}

LcpInstance ave_to_lcp(const Matrix& a, const Signature& s, const Vector& b, const Tolerances& tol) {
    linalg::require_square(a);
    linalg::require_length(b, a.rows(), "right-hand side");
    const Eigen::Index n = a.rows();
    const Matrix sa = apply_left(s, a);
    const Matrix identity = Matrix::Identity(n, n);
    const Matrix minus = identity - sa;
    if (linalg::det_sign(minus, tol) == 0) {
        throw InvalidInput("I - S A is singular for S = " + s.to_string());
    }
    Eigen::FullPivLU<Matrix> lu(minus);
    return {lu.solve(identity + sa), lu.solve(s.apply(b))};
}

LcpSolution ave_solution_to_lcp(const Signature& s, const Vector& z) {
    const Vector y = s.apply(z);
    return {(-y).cwiseMax(0.0), y.cwiseMax(0.0)};
}

Vector lcp_solution_to_ave(const Signature& s, const LcpSolution& sol) { return s.apply(Vector(sol.w - sol.z)); }

std::vector<LcpSolution> lcp_solve_enumerative(const LcpInstance& inst, const Tolerances& tol) {
    linalg::require_square(inst.M, "LCP matrix");
    linalg::require_length(inst.q, inst.M.rows(), "LCP vector");
    const Eigen::Index n = inst.M.rows();
    const double feas = tol.nonneg * std::max({1.0, linalg::norm_inf(inst.M), linalg::norm_inf(inst.q)});

    std::vector<LcpSolution> out;
    for (const Signature basis : enumerate_signatures(static_cast<std::size_t>(n), tol.max_n)) {
        // Entries marked -1 have z basic (w_i = 0), the rest have w basic (z_i = 0).
        std::vector<Eigen::Index> alpha;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (basis[static_cast<std::size_t>(i)] < 0) alpha.push_back(i);
        }
        Vector z = Vector::Zero(n);
        if (!alpha.empty()) {
            const auto k = static_cast<Eigen::Index>(alpha.size());
            Matrix sub(k, k);
            Vector rhs(k);
            for (Eigen::Index r = 0; r < k; ++r) {
                for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = inst.M(alpha[r], alpha[c]);
                rhs[r] = -inst.q[alpha[r]];
            }
            const auto za = linalg::solve_linear(sub, rhs, tol);
            if (!za) continue;
            for (Eigen::Index r = 0; r < k; ++r) z[alpha[r]] = (*za)[r];
        }
        Vector w = inst.M * z + inst.q;
        for (Eigen::Index i : alpha) w[i] = 0.0;
        if (z.minCoeff() < -feas || w.minCoeff() < -feas) continue;
        const bool seen = std::any_of(out.begin(), out.end(), [&](const LcpSolution& s) {
            return linalg::norm_inf(Vector(s.z - z)) <= tol.dedupe * std::max(1.0, linalg::norm_inf(z));
        });
        if (!seen) out.push_back({std::move(z), std::move(w)});
    }
    return out;
}

namespace {

struct Arc {
    double start = 0.0;  // in [0, 2 pi)
    double length = 0.0;
};

double wrap(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    angle = std::fmod(angle, two_pi);
    return angle < 0.0 ? angle + two_pi : angle;
}

constexpr double kGapTolerance = 1e-9;

bool covered(const std::vector<Arc>& arcs, double theta) {
    return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& arc) {
        const double offset = wrap(theta - arc.start);
        return offset <= arc.length + 1e-15 || offset >= 2.0 * std::numbers::pi - 1e-15;
    });
}

// Midpoint of an uncovered gap of the 2-D complementary cones, or nullopt if they cover the plane.
std::optional<double> uncovered_direction(const Matrix& m) {
    std::vector<Arc> arcs;
    for (std::uint64_t mask = 0; mask < 4; ++mask) {
        Eigen::Vector2d g[2];
        for (int i = 0; i < 2; ++i) {
            g[i] = ((mask >> i) & 1U) ? Eigen::Vector2d(-m.col(i)) : Eigen::Vector2d::Unit(i);
        }
        const double cross = g[0].x() * g[1].y() - g[0].y() * g[1].x();
        if (std::abs(cross) <= 1e-14 * g[0].norm() * g[1].norm()) continue;  // measure-zero cone
        const Eigen::Vector2d& from = cross > 0 ? g[0] : g[1];
        const Eigen::Vector2d& to = cross > 0 ? g[1] : g[0];
        const double start = wrap(std::atan2(from.y(), from.x()));
        const double length = wrap(std::atan2(to.y(), to.x()) - start);
        arcs.push_back({start, length});
    }
    if (arcs.empty()) return 0.0;

    for (const auto& arc : arcs) {
        const double probe = wrap(arc.start + arc.length + kGapTolerance);
        if (covered(arcs, probe)) continue;
        double next = 2.0 * std::numbers::pi;
        for (const auto& other : arcs) next = std::min(next, wrap(other.start - probe));
        return wrap(probe + 0.5 * next);
    }
    return std::nullopt;
}

bool solvable(const Matrix& m, const Vector& q, const Tolerances& tol) {
    return !lcp_solve_enumerative({m, q}, tol).empty();
}

}  // namespace

QCheckReport q_check(const Matrix& m, const Tolerances& tol, std::uint64_t seed, int samples) {
    linalg::require_square(m, "LCP matrix");
    const Eigen::Index n = m.rows();
    QCheckReport report;

    if (n == 1) {
        report.method = Method::exact_2d;
        if (m(0, 0) > tol.sing) {
            report.verdict = Verdict::Q;
        } else {
            report.verdict = Verdict::not_Q;
            report.counterexample_q = Vector::Constant(1, -1.0);
        }
        return report;
    }

    if (n == 2) {
        report.method = Method::exact_2d;
        const auto gap = uncovered_direction(m);
        if (!gap) {
            report.verdict = Verdict::Q;
            return report;
        }
        const Eigen::Vector2d unit(std::cos(*gap), std::sin(*gap));
        const Vector direction = unit / unit.cwiseAbs().maxCoeff();
        if (solvable(m, direction, tol)) {
            report.verdict = Verdict::undecided;
            return report;
        }
        report.verdict = Verdict::not_Q;
        report.counterexample_q = direction;
        return report;
    }

    report.method = Method::sampling;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int k = 0; k < samples; ++k) {
        Vector q(n);
        for (Eigen::Index i = 0; i < n; ++i) q[i] = normal(rng);
        q /= q.norm();
        ++report.samples;
        if (!solvable(m, q, tol)) {
            report.verdict = Verdict::not_Q;
            report.counterexample_q = q;
            return report;
        }
    }
    report.verdict = Verdict::undecided;
    return report;
}

bool p_matrix_check(const Matrix& m, const Tolerances& tol) {
    linalg::require_square(m, "matrix");
    const Eigen::Index n = m.rows();
    const double s = linalg::scale(m);
    for (const Signature subset : enumerate_signatures(static_cast<std::size_t>(n), tol.max_n)) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (subset[static_cast<std::size_t>(i)] < 0) idx.push_back(i);
        }
        if (idx.empty()) continue;
        const auto k = static_cast<Eigen::Index>(idx.size());
        Matrix sub(k, k);
        for (Eigen::Index r = 0; r < k; ++r) {
            for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = m(idx[r], idx[c]);
        }
        const double minor = Eigen::FullPivLU<Matrix>(sub).determinant();
        if (!(minor > tol.sing * std::pow(s, static_cast<double>(k)))) return false;
    }
    return true;
}

}  // namespace avelab::lcp
