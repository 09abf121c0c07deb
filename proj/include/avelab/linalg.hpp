#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace avelab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default cap on n for anything that enumerates all 2^n signatures.
inline constexpr std::size_t kDefaultMaxDimension = 20;

/**
 * Numerical thresholds shared by every module.
 *
 * Residual, imaginary-part and singularity thresholds are relative to
 * max(1, ||A||_inf) of the matrix they are applied to; nonnegativity,
 * boundary and dedupe thresholds are relative to vectors normalized to
 * unit infinity norm.
 */
struct Tolerances {
    double residual = 1e-9;
    double im = 1e-9;
    double nonneg = 1e-9;
    double boundary = 1e-9;
    double dedupe = 1e-7;
    double sing = 1e-11;
    /// Enumeration cap on n (2^n signatures); raise it explicitly to go beyond.
    std::size_t max_n = kDefaultMaxDimension;

    /// Throws InvalidInput unless every threshold lies in [0, 1).
    void validate() const;
};

namespace linalg {

struct EigenPair {
    double value = 0.0;
    Vector vector;  // infinity norm 1, largest-magnitude entry positive
    double residual = 0.0;
};

/// Throws InvalidInput if `a` is empty, non-square or has a non-finite entry.
void require_square(const Matrix& a, std::string_view what = "matrix");
/// Throws InvalidInput unless `v` has length `n` and finite entries.
void require_length(const Vector& v, Eigen::Index n, std::string_view what = "vector");

double norm_inf(const Matrix& a);
double norm_inf(const Vector& v);

/// max(1, ||a||_inf), the reference magnitude for relative thresholds.
double scale(const Matrix& a);

/// Rescales to infinity norm 1 and flips the sign so the largest-magnitude entry is positive.
/// Ties go to the lowest index. The zero vector is returned unchanged.
Vector normalize_inf(const Vector& v);

/// All eigenvalues (complex) of a real square matrix, from a real Schur decomposition.
/// Throws NumericFailure when the QR iteration exceeds 100*n sweeps.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/**
 * Real eigenvalues of `a` with algebraic multiplicity.
 *
 * Computed eigenvalues closer than tol.dedupe * scale(a) are clustered and
 * replaced by their mean; a cluster counts as real when the imaginary part
 * of that mean is at most tol.im * scale(a). Conjugate pairs split by a
 * defective real eigenvalue therefore collapse to one real value.
 */
struct RealEigenvalue {
    double value = 0.0;
    int multiplicity = 1;
};
std::vector<RealEigenvalue> real_eigenvalues(const Matrix& a, const Tolerances& tol);

/**
 * Every real eigenvalue of `a` paired with independent real eigenvectors.
 *
 * An eigenvalue is repeated once per independent eigenvector found (its
 * numerical geometric multiplicity, capped by the algebraic one). Every
 * returned pair satisfies ||a v - value v||_inf <= tol.residual * scale(a).
 * Real eigenvalues for which no vector meets that bound, even after a
 * Rayleigh-quotient refinement, are omitted.
 */
std::vector<EigenPair> real_eigenpairs(const Matrix& a, const Tolerances& tol);

/// Solves m x = b. Returns nullopt when m is numerically singular (smallest pivot of a
/// full-pivoting LU below tol.sing * ||m||_inf) or when the residual contract cannot be met.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b, const Tolerances& tol);

/// Minimum-norm least-squares solution through the SVD, truncated at tol.sing * ||m||_inf.
Vector least_squares(const Matrix& m, const Vector& b, const Tolerances& tol);

/// Orthonormal basis (as columns) of the numerical null space of m.
Matrix kernel_basis(const Matrix& m, const Tolerances& tol);

/// Orthonormal basis (as columns) of the numerical column space of m.
Matrix image_basis(const Matrix& m, const Tolerances& tol);

/// Numerical rank: singular values above tol.sing * ||m||_inf.
int rank(const Matrix& m, const Tolerances& tol);

/// Sign of det(m), or 0 when m is singular at threshold tol.sing.
int det_sign(const Matrix& m, const Tolerances& tol);

}  // namespace linalg
}  // namespace avelab
