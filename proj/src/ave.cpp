#include "avelab/ave.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "avelab/errors.hpp"
#include "combinations.hpp"

namespace avelab::ave {

int SolveReport::orientation_sum() const {
    int sum = 0;
    for (const auto& s : solutions) sum += s.orientation;
    return sum;
}

Vector eval_F(const Matrix& a, const Vector& z) {
    linalg::require_square(a);
    linalg::require_length(z, a.rows(), "point");
    return z - a * z.cwiseAbs();
}

namespace {

struct Candidate {
    Vector z;
};

enum class AffineMeet { empty, point, continuum };

struct AffineResult {
    AffineMeet kind = AffineMeet::empty;
    Vector point;
};

// Intersects {particular + K c} with the closed orthant s. The constraint matrix
// s*K has full column rank, so the polyhedron in c is pointed and is nonempty
// iff it has a vertex; vertices come from k active sign constraints.
AffineResult affine_meets_orthant(const Vector& particular, const Matrix& kernel, const Signature& s,
                                  const Tolerances& tol) {
    const Eigen::Index n = kernel.rows();
    const Eigen::Index k = kernel.cols();
    const Vector sv = s.as_vector();
    const Matrix g = sv.asDiagonal() * kernel;
    const Vector h = sv.cwiseProduct(particular);

    std::vector<Vector> vertices;
    auto active = detail::first_combination(k);
    do {
        Matrix rows(k, k);
        Vector rhs(k);
        for (Eigen::Index r = 0; r < k; ++r) {
            rows.row(r) = g.row(active[static_cast<std::size_t>(r)]);
            rhs[r] = -h[active[static_cast<std::size_t>(r)]];
        }
        const auto c = linalg::solve_linear(rows, rhs, tol);
        if (!c) continue;
        Vector z = particular + kernel * *c;
        const double zn = linalg::norm_inf(z);
        if (s.apply(z).minCoeff() < -tol.boundary * std::max(zn, 1e-300)) continue;
        const bool seen = std::any_of(vertices.begin(), vertices.end(), [&](const Vector& v) {
            return linalg::norm_inf(Vector(v - z)) <= tol.dedupe * std::max(1.0, zn);
        });
        if (!seen) vertices.push_back(std::move(z));
        if (vertices.size() > 1) return {AffineMeet::continuum, {}};
    } while (detail::next_combination(active, n));

    if (vertices.empty()) return {};
    if (!orthant_extreme_rays(kernel, s, tol).rays.empty()) return {AffineMeet::continuum, {}};
    return {AffineMeet::point, vertices.front()};
}

int common_orientation(const Matrix& a, const std::vector<Signature>& signatures, const Tolerances& tol) {
    const Eigen::Index n = a.rows();
    int orientation = 0;
    for (const auto& s : signatures) {
        const int d = linalg::det_sign(Matrix::Identity(n, n) - apply_right(a, s), tol);
        if (d == 0) return 0;
        if (orientation == 0) {
            orientation = d;
        } else if (orientation != d) {
            return 0;
        }
    }
    return orientation;
}

}  // namespace

SolveReport solve_all(const Matrix& a, const Vector& b, const Tolerances& tol) {
    linalg::require_square(a);
    linalg::require_length(b, a.rows(), "right-hand side");
    const Eigen::Index n = a.rows();
    const auto nu = static_cast<std::size_t>(n);
    const Matrix identity = Matrix::Identity(n, n);

    SolveReport report;
    std::vector<Candidate> candidates;
    const auto add = [&](Vector z) {
        const double zn = linalg::norm_inf(z);
        for (const auto& c : candidates) {
            if (linalg::norm_inf(Vector(c.z - z)) <= tol.dedupe * std::max(1.0, zn)) return;
        }
        candidates.push_back({std::move(z)});
    };

    for (const Signature s : enumerate_signatures(nu, tol.max_n)) {
        const Matrix piece = identity - apply_right(a, s);
        if (auto z = linalg::solve_linear(piece, b, tol)) {
            if (orthant_membership(s, *z, tol).inside) add(std::move(*z));
            continue;
        }
        report.singular_orthants.push_back(s);
        const Vector particular = linalg::least_squares(piece, b, tol);
        const double bound = tol.residual * linalg::scale(piece) * std::max(1.0, linalg::norm_inf(b));
        if (linalg::norm_inf(Vector(piece * particular - b)) > bound) continue;
        const Matrix kernel = linalg::kernel_basis(piece, tol);
        if (kernel.cols() == 0) {
            if (orthant_membership(s, particular, tol).inside) add(particular);
            continue;
        }
        const auto meet = affine_meets_orthant(particular, kernel, s, tol);
        if (meet.kind == AffineMeet::continuum) {
            report.continuum_orthants.push_back(s);
        } else if (meet.kind == AffineMeet::point) {
            add(meet.point);
        }
    }

    for (auto& c : candidates) {
        AveSolution sol;
        if (linalg::norm_inf(c.z) == 0.0) {
            for (const Signature s : enumerate_signatures(nu, tol.max_n)) sol.signatures.push_back(s);
        } else {
            sol.signatures = signatures_of(c.z, tol);
        }
        sol.on_boundary = sol.signatures.size() > 1;
        sol.orientation = common_orientation(a, sol.signatures, tol);
        sol.z = std::move(c.z);
        report.solutions.push_back(std::move(sol));
    }

    report.b_regular = !report.continuum() &&
                       std::none_of(report.solutions.begin(), report.solutions.end(), [](const AveSolution& s) {
                           return s.on_boundary || s.orientation == 0;
                       });
    return report;
}

DegreeReport degree(const Matrix& a, const Tolerances& tol, const DegreeOptions& options) {
    linalg::require_square(a);
    DegreeReport report;
    report.seed = options.seed;
    if (spectrum::is_degenerate(a, tol)) {
        report.failure = "degenerate: 1 is an aligning value, F_A^{-1}(0) != {0}";
        return report;
    }

    const Eigen::Index n = a.rows();
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    while (report.trials_used < options.trials) {
        Vector b(n);
        for (Eigen::Index i = 0; i < n; ++i) b[i] = normal(rng);
        const double norm = b.norm();
        if (norm == 0.0) continue;
        b /= norm;

        const auto solved = solve_all(a, b, tol);
        report.max_preimages = std::max(report.max_preimages, solved.solutions.size());
        if (!solved.b_regular) {
            if (++report.trials_rejected > options.max_rejections) {
                report.failure = "rejection budget exhausted";
                return report;
            }
            continue;
        }
        report.trial_degrees.push_back(solved.orientation_sum());
        ++report.trials_used;
    }

    const auto& d = report.trial_degrees;
    if (!d.empty() && std::all_of(d.begin(), d.end(), [&](int v) { return v == d.front(); })) {
        report.degree = d.front();
    } else {
        report.failure = "accepted trials disagree";
    }
    return report;
}

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::contracted: return "contracted";
        case Direction::collapsed: return "collapsed";
        case Direction::reflected: return "reflected";
    }
    return "unknown";
}

Direction aligning_direction_check(const Matrix& a, const spectrum::AligningPair& pair, const Tolerances& tol) {
    const Vector& w = pair.aligning_vector;
    const double lambda = pair.lambda;
    const double bound = 2.0 * tol.residual * linalg::scale(a);

    const Vector forward = eval_F(a, w);
    if (linalg::norm_inf(Vector(forward - (1.0 - lambda) * w)) > bound) {
        throw InvariantBreach("F_A(w) != (1 - lambda) w on aligning vector");
    }
    const Vector backward = eval_F(a, Vector(-w));
    if (linalg::norm_inf(Vector(backward + (1.0 + lambda) * w)) > bound) {
        throw InvariantBreach("F_A(-w) != -(1 + lambda) w on aligning vector");
    }
    if (std::abs(lambda - 1.0) <= tol.dedupe) return Direction::collapsed;
    return lambda < 1.0 ? Direction::contracted : Direction::reflected;
}

KernelOrthant kernel_meets_orthant(const Matrix& m, const Signature& s, const Tolerances& tol) {
    linalg::require_square(m);
    KernelOrthant out;
    const Matrix kernel = linalg::kernel_basis(m, tol);
    if (kernel.cols() == 0) return out;
    auto cone = orthant_extreme_rays(kernel, s, tol);
    out.inconclusive = cone.truncated;
    if (!cone.rays.empty()) {
        out.meets = true;
        out.witness = std::move(cone.rays.front());
    }
    return out;
}

bool ker_im_intersection_trivial(const Matrix& a, const Tolerances& tol) {
    linalg::require_square(a);
    const Eigen::Index n = a.rows();
    const Matrix m = Matrix::Identity(n, n) - a;
    const Matrix kernel = linalg::kernel_basis(m, tol);
    const Matrix image = linalg::image_basis(m, tol);
    Matrix stacked(n, kernel.cols() + image.cols());
    stacked << kernel, image;
    Eigen::JacobiSVD<Matrix> svd(stacked);
    const auto& sv = svd.singularValues();
    const long independent = (sv.array() > tol.sing * sv[0]).count();
    return independent == stacked.cols();
}

std::string_view to_string(ImageShape s) {
    switch (s) {
        case ImageShape::simplicial: return "simplicial";
        case ImageShape::pointed_lowdim: return "pointed_lowdim";
        case ImageShape::line_detected: return "line_detected";
    }
    return "unknown";
}

OrthantImage orthant_image_degeneracy(const Matrix& a, const Signature& s, const Tolerances& tol) {
    linalg::require_square(a);
    const Eigen::Index n = a.rows();
    const Matrix piece = Matrix::Identity(n, n) - apply_right(a, s);
    OrthantImage out;
    if (linalg::det_sign(piece, tol) != 0) return out;
    const auto meet = kernel_meets_orthant(piece, s, tol);
    out.inconclusive = meet.inconclusive;
    if (meet.meets) {
        out.shape = ImageShape::line_detected;
        out.certificate = meet.witness;
    } else {
        out.shape = ImageShape::pointed_lowdim;
    }
    return out;
}

}  // namespace avelab::ave
