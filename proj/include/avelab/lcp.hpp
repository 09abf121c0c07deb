#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "avelab/linalg.hpp"
#include "avelab/signatures.hpp"

namespace avelab::lcp {

/// LCP(q, M): find z >= 0 with w = M z + q >= 0 and z'w = 0.
struct LcpInstance {
    Matrix M;
    Vector q;
};

struct LcpSolution {
    Vector z;
    Vector w;
};

enum class Verdict { Q, not_Q, undecided };
enum class Method { exact_2d, sampling };

std::string_view to_string(Verdict v);
std::string_view to_string(Method m);

struct QCheckReport {
    Verdict verdict = Verdict::undecided;
    Method method = Method::sampling;
    /// Present iff verdict == not_Q; verified to admit no complementary solution.
    std::optional<Vector> counterexample_q;
    int samples = 0;
};

/**
 * Reduces z - A|z| = b to an LCP through the signature S.
 *
 * With y = S z split as y = u - v (u, v >= 0 complementary), S F_A(z) =
 * F_{SA}(y) turns the equation into u = M v + q with M = (I - SA)^{-1}(I + SA)
 * and q = (I - SA)^{-1} S b. The LCP variable is v (negative part of S z); its
 * slack w is u (positive part). Throws InvalidInput naming S when I - SA is singular.
 */
LcpInstance ave_to_lcp(const Matrix& a, const Signature& s, const Vector& b, const Tolerances& tol = {});

/// The complementary pair of an AVE solution z under the reduction through S.
LcpSolution ave_solution_to_lcp(const Signature& s, const Vector& z);
/// Inverse of ave_solution_to_lcp: z = S (w - z_lcp).
Vector lcp_solution_to_ave(const Signature& s, const LcpSolution& sol);

/// All complementary solutions found by enumerating the 2^n complementary bases.
/// Bases whose principal submatrix is singular are skipped.
std::vector<LcpSolution> lcp_solve_enumerative(const LcpInstance& inst, const Tolerances& tol = {});

/**
 * Q-matrix test.
 *
 * n <= 2: exact. The complementary cones pos{columns of I or -M} are arcs of the
 * circle; M is Q iff the arcs cover it (gaps narrower than 1e-9 rad count as covered).
 * n > 2: seeded sampling of unit-normal q; the verdict is never Q, only
 * undecided (no failure among `samples`) or not_Q with a verified counterexample.
 */
QCheckReport q_check(const Matrix& m, const Tolerances& tol = {}, std::uint64_t seed = 42, int samples = 500);

/// All principal minors positive (above tol.sing * max(1, ||M||_inf)^k for k x k minors).
bool p_matrix_check(const Matrix& m, const Tolerances& tol = {});

}  // namespace avelab::lcp
