#pragma once

#include <cstdint>
#include <vector>

#include "avelab/linalg.hpp"

namespace avelab::compare {

struct OptimizerTrace {
    int iterations = 0;
    /// Best value after each restart (running maximum).
    std::vector<double> best_so_far;
};

struct MaxMinResult {
    double value = 0.0;
    Vector argmax;
    bool restricted_nonneg = false;
    OptimizerTrace trace;
};

struct SearchOptions {
    std::uint64_t seed = 42;
    int restarts = 64;
    int iterations = 500;
    double shrink = 0.5;
    /// Nonneg search only: lower bound on x_i / ||x||_inf (0 searches the closed orthant).
    double interior_floor = 0.0;
};

/// min over i with |x_i| > tol.boundary * ||x||_inf of |(A x)_i / x_i|. Throws InvalidInput for x = 0.
double quotient_functional(const Matrix& a, const Vector& x, const Tolerances& tol = {});

/// Best found max over x != 0 of quotient_functional(A, x); a lower bound on the true maximum.
/// Also runs the orthant-restricted search, so the value is never below maxmin_over_nonneg.
MaxMinResult maxmin_over_sphere(const Matrix& a, const Tolerances& tol = {}, const SearchOptions& options = {});

/// Same search restricted to the nonnegative orthant.
MaxMinResult maxmin_over_nonneg(const Matrix& a, const Tolerances& tol = {}, const SearchOptions& options = {});

struct CoincidenceReport {
    double rho_a = 0.0;
    double rho_R = 0.0;
    double lhs = 0.0;           // max-min over all of R^n
    double rhs = 0.0;           // max-min over the closed nonnegative orthant
    double rhs_interior = 0.0;  // max-min with every entry kept >= 1e-6 * ||x||_inf
    bool coincide_spectra = false;
    bool coincide_functionals = false;
};

/// Both radii and both max-min values. `band` is the functional agreement tolerance.
CoincidenceReport coincidence_report(const Matrix& a, const Tolerances& tol = {}, const SearchOptions& options = {},
                                     double band = 1e-3);

}  // namespace avelab::compare
