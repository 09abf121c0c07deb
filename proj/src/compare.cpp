#include "avelab/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "avelab/errors.hpp"
#include "avelab/spectrum.hpp"

namespace avelab::compare {

double quotient_functional(const Matrix& a, const Vector& x, const Tolerances& tol) {
    linalg::require_square(a);
    linalg::require_length(x, a.rows(), "point");
    const double norm = linalg::norm_inf(x);
    if (!(norm > 0.0)) throw InvalidInput("quotient functional is undefined at x = 0");
    const Vector ax = a * x;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) > tol.boundary * norm) best = std::min(best, std::abs(ax[i] / x[i]));
    }
    return best;
}

namespace {

class Search {
public:
    Search(const Matrix& a, const Tolerances& tol, const SearchOptions& options, bool nonneg)
        : a_(a), tol_(tol), options_(options), nonneg_(nonneg), rng_(options.seed) {}

    MaxMinResult run() {
        const Eigen::Index n = a_.rows();
        MaxMinResult result;
        result.restricted_nonneg = nonneg_;
        result.value = -1.0;
        for (int r = 0; r < options_.restarts; ++r) {
            Vector start = r == 0 ? Vector(Vector::Ones(n)) : gaussian(n);
            auto x = project(start);
            if (!x) x = project(Vector::Ones(n));
            double fx = value(*x);
            warm_up(*x, fx);
            result.trace.iterations += polish(*x, fx);
            if (fx > result.value) {
                result.value = fx;
                result.argmax = *x;
            }
            result.trace.best_so_far.push_back(result.value);
        }
        return result;
    }

private:
    Vector gaussian(Eigen::Index n) {
        Vector v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = normal_(rng_);
        return v;
    }

    // Feasible representative: nonneg projection (with interior floor), tiny entries
    // zeroed so the functional sees exactly the support it is evaluated on, unit inf-norm.
    std::optional<Vector> project(Vector x) const {
        if (nonneg_) x = x.cwiseMax(0.0);
        double norm = linalg::norm_inf(x);
        if (!(norm > 0.0) || !std::isfinite(norm)) return std::nullopt;
        x /= norm;
        if (nonneg_ && options_.interior_floor > 0.0) x = x.cwiseMax(options_.interior_floor);
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            if (std::abs(x[i]) <= tol_.boundary) x[i] = 0.0;
        }
        norm = linalg::norm_inf(x);
        return x / norm;
    }

    double value(const Vector& x) const { return quotient_functional(a_, x, tol_); }

    // Follows the power sequence x <- A x (|A x| on the orthant) and keeps the best iterate.
    void warm_up(Vector& x, double& fx) const {
        Vector y = x;
        for (int k = 0; k < 32; ++k) {
            Vector next = a_ * y;
            if (nonneg_) next = next.cwiseAbs();
            auto p = project(next);
            if (!p) return;
            y = *p;
            const double fy = value(y);
            if (fy > fx) {
                x = y;
                fx = fy;
            }
        }
    }

    // Pattern search polling coordinate and random directions; returns iterations used.
    int polish(Vector& x, double& fx) {
        const Eigen::Index n = x.size();
        double step = 0.5;
        int it = 0;
        for (; it < options_.iterations && step > 1e-13; ++it) {
            bool improved = false;
            for (Eigen::Index d = 0; d < 4 * n && !improved; ++d) {
                Vector dir = d < 2 * n ? Vector(Vector::Unit(n, d / 2) * (d % 2 == 0 ? 1.0 : -1.0))
                                       : Vector(gaussian(n).normalized());
                const auto cand = project(Vector(x + step * dir));
                if (!cand) continue;
                const double fc = value(*cand);
                if (fc > fx) {
                    x = *cand;
                    fx = fc;
                    improved = true;
                }
            }
            if (!improved) step *= options_.shrink;
        }
        return it;
    }

    const Matrix& a_;
    const Tolerances& tol_;
    SearchOptions options_;
    bool nonneg_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace

MaxMinResult maxmin_over_sphere(const Matrix& a, const Tolerances& tol, const SearchOptions& options) {
    linalg::require_square(a);
    auto result = Search(a, tol, options, false).run();
    // The orthant is part of the search domain; its own search covers the boundary-heavy optima.
    const auto restricted = Search(a, tol, options, true).run();
    if (restricted.value > result.value) {
        result.value = restricted.value;
        result.argmax = restricted.argmax;
    }
    result.trace.iterations += restricted.trace.iterations;
    return result;
}

MaxMinResult maxmin_over_nonneg(const Matrix& a, const Tolerances& tol, const SearchOptions& options) {
    linalg::require_square(a);
    return Search(a, tol, options, true).run();
}

CoincidenceReport coincidence_report(const Matrix& a, const Tolerances& tol, const SearchOptions& options,
                                     double band) {
    CoincidenceReport r;
    r.rho_a = spectrum::rho_a(a, tol);
    r.rho_R = spectrum::rho_sign_real(a, tol);
    r.lhs = maxmin_over_sphere(a, tol, options).value;
    r.rhs = maxmin_over_nonneg(a, tol, options).value;
    SearchOptions interior = options;
    interior.interior_floor = 1e-6;
    r.rhs_interior = maxmin_over_nonneg(a, tol, interior).value;
    r.coincide_spectra = std::abs(r.rho_a - r.rho_R) <= 1e-6 * std::max(1.0, r.rho_R);
    r.coincide_functionals = std::abs(r.lhs - r.rhs) <= band;
    return r;
}

}  // namespace avelab::compare
