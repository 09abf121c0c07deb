#include "avelab/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "avelab/errors.hpp"

namespace avelab::spectrum {

std::string_view to_string(SimplicityReason reason) {
    switch (reason) {
        case SimplicityReason::multiple_rays: return "multiple_rays";
        case SimplicityReason::boundary_ray: return "boundary_ray";
        case SimplicityReason::non_simple_eigenvalue: return "non_simple_eigenvalue";
        case SimplicityReason::empty_positive_spectrum: return "empty_positive_spectrum";
    }
    return "unknown";
}

namespace {

void merge_pair(std::vector<AligningPair>& pairs, AligningPair candidate, const Tolerances& tol) {
    for (const auto& p : pairs) {
        if (std::abs(p.lambda - candidate.lambda) <= tol.dedupe &&
            linalg::norm_inf(Vector(p.aligning_vector - candidate.aligning_vector)) <= tol.dedupe) {
            return;
        }
    }
    pairs.push_back(std::move(candidate));
}

}  // namespace

AligningSpectrum aligning_spectrum(const Matrix& a, const Tolerances& tol) {
    linalg::require_square(a);
    const auto n = static_cast<std::size_t>(a.rows());
    const Signature positive = Signature::positive(n);
    AligningSpectrum out;

    for (const Signature s : enumerate_signatures(n, tol.max_n)) {
        const Matrix sa = apply_left(s, a);
        const double sc = linalg::scale(sa);
        const auto all_values = linalg::eigenvalues(sa);
        const auto pairs = linalg::real_eigenpairs(sa, tol);

        for (std::size_t first = 0; first < pairs.size();) {
            std::size_t last = first;
            while (last < pairs.size() && pairs[last].value == pairs[first].value) ++last;
            const double raw = pairs[first].value;
            if (raw < -tol.residual * sc) {
                first = last;
                continue;
            }

            Matrix basis(a.rows(), static_cast<Eigen::Index>(last - first));
            for (std::size_t k = first; k < last; ++k) {
                basis.col(static_cast<Eigen::Index>(k - first)) = pairs[k].vector;
            }
            std::vector<Vector> rays;
            if (basis.cols() == 1) {
                const Vector& v = pairs[first].vector;  // largest-magnitude entry is positive
                if (v.minCoeff() >= -tol.nonneg) rays.push_back(v);
            } else {
                auto cone = orthant_extreme_rays(basis, positive, tol);
                out.inconclusive = out.inconclusive || cone.truncated;
                rays = std::move(cone.rays);
            }

            const auto near = std::count_if(all_values.begin(), all_values.end(), [&](auto mu) {
                return std::abs(mu - std::complex<double>(raw, 0.0)) <= tol.dedupe * sc;
            });
            for (auto& v : rays) {
                AligningPair p;
                p.lambda = std::max(raw, 0.0);
                p.signature = s;
                p.aligning_vector = s.apply(v);
                p.interior = v.minCoeff() > tol.boundary;
                p.simple_ev = near == 1;
                p.eigvec = std::move(v);
                merge_pair(out.pairs, std::move(p), tol);
            }
            first = last;
        }
    }
    std::stable_sort(out.pairs.begin(), out.pairs.end(),
                     [](const AligningPair& x, const AligningPair& y) { return x.lambda > y.lambda; });
    return out;
}

std::vector<double> aligning_values(const AligningSpectrum& spectrum, const Tolerances& tol) {
    std::vector<double> values;
    for (const auto& p : spectrum.pairs) {
        if (values.empty() || values.back() - p.lambda > tol.dedupe) values.push_back(p.lambda);
    }
    return values;
}

double rho_a(const Matrix& a, const Tolerances& tol) {
    const auto spec = aligning_spectrum(a, tol);
    return spec.pairs.empty() ? 0.0 : spec.pairs.front().lambda;
}

double rho_sign_real(const Matrix& a, const Tolerances& tol) {
    linalg::require_square(a);
    double best = 0.0;
    for (const Signature s : enumerate_signatures(static_cast<std::size_t>(a.rows()), tol.max_n)) {
        for (const auto& ev : linalg::real_eigenvalues(apply_left(s, a), tol)) {
            best = std::max(best, std::abs(ev.value));
        }
    }
    return best;
}

bool is_degenerate(const AligningSpectrum& spectrum, const Tolerances& tol) {
    return std::any_of(spectrum.pairs.begin(), spectrum.pairs.end(),
                       [&](const AligningPair& p) { return std::abs(p.lambda - 1.0) <= tol.dedupe; });
}

bool is_degenerate(const Matrix& a, const Tolerances& tol) {
    return is_degenerate(aligning_spectrum(a, tol), tol);
}

SimplicityReport simplicity(const AligningSpectrum& spectrum, const Tolerances& tol) {
    SimplicityReport report;
    const auto add = [&](SimplicityReason r) {
        if (std::find(report.reasons.begin(), report.reasons.end(), r) == report.reasons.end()) {
            report.reasons.push_back(r);
        }
    };
    if (spectrum.pairs.empty() || spectrum.pairs.front().lambda <= tol.dedupe) {
        add(SimplicityReason::empty_positive_spectrum);
    }
    if (!spectrum.pairs.empty()) {
        const double top = spectrum.pairs.front().lambda;
        std::size_t rays = 0;
        for (const auto& p : spectrum.pairs) {
            if (top - p.lambda > tol.dedupe) break;
            ++rays;
            if (!p.interior) add(SimplicityReason::boundary_ray);
            if (!p.simple_ev) add(SimplicityReason::non_simple_eigenvalue);
        }
        if (rays > 1) add(SimplicityReason::multiple_rays);
    }
    report.is_simple = report.reasons.empty();
    return report;
}

SimplicityReport simplicity(const Matrix& a, const Tolerances& tol) {
    return simplicity(aligning_spectrum(a, tol), tol);
}

Matrix principal_submatrix(const Matrix& a, Eigen::Index index) {
    linalg::require_square(a);
    const Eigen::Index n = a.rows();
    if (n < 2) throw InvalidInput("principal submatrix needs n >= 2");
    if (index < 0 || index >= n) {
        throw InvalidInput("principal submatrix index " + std::to_string(index) + " out of range");
    }
    Matrix out(n - 1, n - 1);
    for (Eigen::Index i = 0, r = 0; i < n; ++i) {
        if (i == index) continue;
        for (Eigen::Index j = 0, c = 0; j < n; ++j) {
            if (j == index) continue;
            out(r, c++) = a(i, j);
        }
        ++r;
    }
    return out;
}

}  // namespace avelab::spectrum
