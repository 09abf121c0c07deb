#include "avelab/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "avelab/errors.hpp"
#include "avelab/spectrum.hpp"

namespace avelab::homotopy {

Vector eval_H(const Matrix& a, const Vector& z, double t) {
    linalg::require_square(a);
    linalg::require_length(z, a.rows(), "point");
    if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidInput("homotopy parameter t must be finite and >= 0");
    return z - t * (a * z.cwiseAbs());
}

PropernessBreakpoints properness_breakpoints(const Matrix& a, const Tolerances& tol) {
    const auto spec = spectrum::aligning_spectrum(a, tol);
    PropernessBreakpoints out;
    for (double lambda : spectrum::aligning_values(spec, tol)) {
        if (lambda > tol.dedupe) {
            out.breakpoints.push_back(1.0 / lambda);
        } else {
            out.has_zero_aligning_value = true;
        }
    }
    std::sort(out.breakpoints.begin(), out.breakpoints.end());
    return out;
}

std::vector<ProfilePoint> degree_profile(const Matrix& a, const std::vector<double>& ts, const Tolerances& tol,
                                         const ave::DegreeOptions& options) {
    linalg::require_square(a);
    std::vector<ProfilePoint> out;
    out.reserve(ts.size());
    for (double t : ts) {
        if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidInput("profile parameters must be finite and >= 0");
        const auto report = ave::degree(t * a, tol, options);
        out.push_back({t, report.degree, report.failure});
    }
    return out;
}

CircleTrace circle_trace(const Matrix& a, double t, std::size_t m) {
    linalg::require_square(a);
    if (a.rows() != 2) throw DimensionMismatch("circle traces need a 2x2 matrix");
    if (m < 16) throw InvalidInput("circle traces need at least 16 samples");
    CircleTrace trace;
    trace.t = t;
    trace.samples.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        TraceSample s;
        s.theta = theta;
        s.point = {std::cos(theta), std::sin(theta)};
        s.image = eval_H(a, s.point, t);
        trace.samples.push_back(s);
    }
    return trace;
}

std::optional<int> winding_number(const CircleTrace& trace, const Tolerances& tol) {
    const auto& samples = trace.samples;
    if (samples.size() < 2) return std::nullopt;
    for (const auto& s : samples) {
        if (s.image.norm() <= tol.boundary) return std::nullopt;
    }
    constexpr double kHalfTurnGuard = 1e-6;
    double total = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& p = samples[k].image;
        const auto& q = samples[(k + 1) % samples.size()].image;
        const double step = std::atan2(p.x() * q.y() - p.y() * q.x(), p.dot(q));
        if (std::abs(step) >= std::numbers::pi - kHalfTurnGuard) return std::nullopt;
        total += step;
    }
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) >= 0.01) return std::nullopt;
    return static_cast<int>(rounded);
}

}  // namespace avelab::homotopy
