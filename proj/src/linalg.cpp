#include "avelab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "avelab/errors.hpp"

namespace avelab {

void Tolerances::validate() const {
    const auto check = [](double v, const char* name) {
        if (!(v >= 0.0 && v < 1.0)) {
            throw InvalidInput(std::string("tolerance ") + name + " must lie in [0, 1), got " +
                               std::to_string(v));
        }
    };
    check(residual, "residual");
    check(im, "im");
    check(nonneg, "nonneg");
    check(boundary, "boundary");
    check(dedupe, "dedupe");
    check(sing, "sing");
    if (max_n == 0) {
        throw InvalidInput("max_n must be positive");
    }
}

namespace linalg {

void require_square(const Matrix& a, std::string_view what) {
    if (a.rows() == 0 || a.rows() != a.cols()) {
        throw InvalidInput(std::string(what) + " must be a non-empty square matrix, got " +
                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    if (!a.allFinite()) {
        throw InvalidInput(std::string(what) + " has a non-finite entry");
    }
}

void require_length(const Vector& v, Eigen::Index n, std::string_view what) {
    if (v.size() != n) {
        throw InvalidInput(std::string(what) + " must have length " + std::to_string(n) +
                           ", got " + std::to_string(v.size()));
    }
    if (!v.allFinite()) {
        throw InvalidInput(std::string(what) + " has a non-finite entry");
    }
}

double norm_inf(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double norm_inf(const Vector& v) {
    if (v.size() == 0) return 0.0;
    return v.cwiseAbs().maxCoeff();
}

double scale(const Matrix& a) { return std::max(1.0, norm_inf(a)); }

Vector normalize_inf(const Vector& v) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > best) {
            best = std::abs(v[i]);
            arg = i;
        }
    }
    if (best <= 0.0) return v;
    Vector out = (v[arg] > 0 ? v : Vector(-v)) / best;
    out[arg] = 1.0;
    return out;
}

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
    require_square(a);
    const Eigen::Index n = a.rows();
    if (n == 1) return {std::complex<double>(a(0, 0), 0.0)};
    Eigen::EigenSolver<Matrix> solver;
    solver.setMaxIterations(static_cast<Eigen::Index>(100 * n));
    solver.compute(a, false);
    if (solver.info() != Eigen::Success) {
        throw NumericFailure("eigenvalue iteration did not converge within " +
                             std::to_string(100 * n) + " sweeps");
    }
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

namespace {

struct Cluster {
    std::complex<double> mean;
    std::vector<std::complex<double>> members;
};

// Single-linkage clustering of eigenvalues at distance `radius`.
std::vector<Cluster> cluster_eigenvalues(std::vector<std::complex<double>> values, double radius) {
    const std::size_t m = values.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (std::abs(values[i] - values[j]) <= radius) parent[find(i)] = find(j);
        }
    }
    std::vector<Cluster> clusters;
    std::vector<long> slot(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(clusters.size());
            clusters.push_back({});
        }
        clusters[static_cast<std::size_t>(slot[root])].members.push_back(values[i]);
    }
    for (auto& c : clusters) {
        std::complex<double> sum = 0.0;
        for (const auto& v : c.members) sum += v;
        c.mean = sum / static_cast<double>(c.members.size());
    }
    return clusters;
}

std::vector<Cluster> real_clusters(const Matrix& a, const Tolerances& tol) {
    const double s = scale(a);
    auto values = eigenvalues(a);
    for (auto& v : values) {
        if (std::abs(v.imag()) <= tol.im * s) v = {v.real(), 0.0};
    }
    auto clusters = cluster_eigenvalues(std::move(values), tol.dedupe * s);
    std::erase_if(clusters, [&](const Cluster& c) { return std::abs(c.mean.imag()) > tol.im * s; });
    std::sort(clusters.begin(), clusters.end(),
              [](const Cluster& x, const Cluster& y) { return x.mean.real() > y.mean.real(); });
    return clusters;
}

double residual_of(const Matrix& a, double lambda, const Vector& v) {
    return norm_inf(Vector(a * v - lambda * v));
}

// Independent eigenvectors for `lambda`, taken from the right singular vectors of
// a - lambda I in order of increasing singular value while they meet the residual bound.
std::vector<EigenPair> vectors_for(const Matrix& a, double lambda, int max_count, double bound) {
    const Eigen::Index n = a.rows();
    const Matrix shifted = a - lambda * Matrix::Identity(n, n);
    Eigen::JacobiSVD<Matrix> svd(shifted, Eigen::ComputeFullV);
    const Matrix& v = svd.matrixV();
    std::vector<EigenPair> out;
    for (Eigen::Index k = n - 1; k >= 0 && static_cast<int>(out.size()) < max_count; --k) {
        Vector candidate = normalize_inf(v.col(k));
        const double r = residual_of(a, lambda, candidate);
        if (r > bound) break;
        out.push_back({lambda, std::move(candidate), r});
    }
    return out;
}

}  // namespace

std::vector<RealEigenvalue> real_eigenvalues(const Matrix& a, const Tolerances& tol) {
    std::vector<RealEigenvalue> out;
    for (const auto& c : real_clusters(a, tol)) {
        out.push_back({c.mean.real(), static_cast<int>(c.members.size())});
    }
    return out;
}

std::vector<EigenPair> real_eigenpairs(const Matrix& a, const Tolerances& tol) {
    require_square(a);
    const double bound = tol.residual * scale(a);
    std::vector<EigenPair> out;
    for (const auto& c : real_clusters(a, tol)) {
        const int mult = static_cast<int>(c.members.size());
        double lambda = c.mean.real();
        auto pairs = vectors_for(a, lambda, mult, bound);
        if (pairs.empty()) {
            // Rayleigh-quotient refinement from the best available direction.
            Eigen::JacobiSVD<Matrix> svd(a - lambda * Matrix::Identity(a.rows(), a.cols()),
                                         Eigen::ComputeFullV);
            const Vector v = svd.matrixV().col(a.cols() - 1);
            lambda = v.dot(a * v) / v.squaredNorm();
            pairs = vectors_for(a, lambda, mult, bound);
        }
        if (pairs.empty() && mult > 1) {
            for (const auto& member : c.members) {
                auto single = vectors_for(a, member.real(), 1, bound);
                if (!single.empty()) {
                    pairs = std::move(single);
                    break;
                }
            }
        }
        for (auto& p : pairs) out.push_back(std::move(p));
    }
    return out;
}

std::optional<Vector> solve_linear(const Matrix& m, const Vector& b, const Tolerances& tol) {
    require_square(m);
    require_length(b, m.rows(), "right-hand side");
    const double mnorm = norm_inf(m);
    Eigen::FullPivLU<Matrix> lu(m);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (min_pivot <= tol.sing * mnorm) return std::nullopt;
    Vector x = lu.solve(b);
    const double bound = tol.residual * std::max(1.0, mnorm) * std::max(1.0, norm_inf(b));
    Vector r = b - m * x;
    if (norm_inf(r) > bound) {
        x += lu.solve(r);
        r = b - m * x;
        if (norm_inf(r) > bound) return std::nullopt;
    }
    return x;
}

Vector least_squares(const Matrix& m, const Vector& b, const Tolerances& tol) {
    require_length(b, m.rows(), "right-hand side");
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double threshold = tol.sing * norm_inf(m);
    const auto& sv = svd.singularValues();
    Vector coeffs = svd.matrixU().transpose() * b;
    Vector x = Vector::Zero(m.cols());
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv[k] > threshold) x += (coeffs[k] / sv[k]) * svd.matrixV().col(k);
    }
    return x;
}

Matrix kernel_basis(const Matrix& m, const Tolerances& tol) {
    require_square(m);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const int r = rank(m, tol);
    return svd.matrixV().rightCols(m.cols() - r);
}

Matrix image_basis(const Matrix& m, const Tolerances& tol) {
    require_square(m);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
    const int r = rank(m, tol);
    return svd.matrixU().leftCols(r);
}

int rank(const Matrix& m, const Tolerances& tol) {
    require_square(m);
    Eigen::JacobiSVD<Matrix> svd(m);
    const double threshold = tol.sing * norm_inf(m);
    const auto& sv = svd.singularValues();
    return static_cast<int>((sv.array() > threshold).count());
}

int det_sign(const Matrix& m, const Tolerances& tol) {
    require_square(m);
    Eigen::FullPivLU<Matrix> lu(m);
    const auto diag = lu.matrixLU().diagonal();
    if (diag.cwiseAbs().minCoeff() <= tol.sing * norm_inf(m)) return 0;
    int sign = lu.permutationP().determinant() * lu.permutationQ().determinant();
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (diag[i] < 0) sign = -sign;
    }
    return sign;
}

}  // namespace linalg
}  // namespace avelab
