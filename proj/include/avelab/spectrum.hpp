#pragma once

#include <string_view>
#include <vector>

#include "avelab/linalg.hpp"
#include "avelab/signatures.hpp"

namespace avelab::spectrum {

/// A nonnegative eigenvalue of S*A with an eigenvector in the closed positive orthant.
struct AligningPair {
    double lambda = 0.0;
    Signature signature;
    Vector eigvec;           // v >= 0, ||v||_inf = 1, (S A) v = lambda v
    Vector aligning_vector;  // S v
    bool interior = false;   // v strictly positive
    bool simple_ev = false;  // lambda is a simple eigenvalue of S A
};

struct AligningSpectrum {
    /// Sorted by lambda, descending; deduplicated by (lambda, aligning ray).
    std::vector<AligningPair> pairs;
    bool deduped = true;
    /// Set when an eigenspace/orthant intersection could not be enumerated completely.
    bool inconclusive = false;
};

enum class SimplicityReason { multiple_rays, boundary_ray, non_simple_eigenvalue, empty_positive_spectrum };

std::string_view to_string(SimplicityReason reason);

struct SimplicityReport {
    bool is_simple = false;
    std::vector<SimplicityReason> reasons;
};

AligningSpectrum aligning_spectrum(const Matrix& a, const Tolerances& tol = {});

/// Distinct aligning values, descending (values within tol.dedupe are one value).
std::vector<double> aligning_values(const AligningSpectrum& spectrum, const Tolerances& tol = {});

/// Largest aligning value; 0 when the spectrum is empty.
double rho_a(const Matrix& a, const Tolerances& tol = {});

/// max over signatures S of the largest |real eigenvalue| of S*A.
double rho_sign_real(const Matrix& a, const Tolerances& tol = {});

/// True iff some aligning value lies within tol.dedupe of 1, i.e. z - A|z| = 0 has a nonzero solution.
bool is_degenerate(const Matrix& a, const Tolerances& tol = {});
bool is_degenerate(const AligningSpectrum& spectrum, const Tolerances& tol = {});

SimplicityReport simplicity(const Matrix& a, const Tolerances& tol = {});
SimplicityReport simplicity(const AligningSpectrum& spectrum, const Tolerances& tol = {});

/// Deletes row and column `index` (0-based). Requires n >= 2.
Matrix principal_submatrix(const Matrix& a, Eigen::Index index);

}  // namespace avelab::spectrum
