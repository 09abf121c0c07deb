#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avelab/linalg.hpp"
#include "avelab/signatures.hpp"
#include "avelab/spectrum.hpp"

namespace avelab::ave {

struct AveSolution {
    Vector z;
    /// Every orthant containing z (all 2^n of them when z = 0).
    std::vector<Signature> signatures;
    bool on_boundary = false;
    /// Common sign of det(I - A S) over `signatures`; 0 if they disagree or one is singular.
    int orientation = 0;
};

struct SolveReport {
    std::vector<AveSolution> solutions;
    /// No boundary solution, no zero orientation, no solution continuum.
    bool b_regular = false;
    /// Orthants where I - A S is singular.
    std::vector<Signature> singular_orthants;
    /// Orthants where the affine solution set of (I - A S) z = b meets the orthant in more than a point.
    std::vector<Signature> continuum_orthants;

    bool continuum() const { return !continuum_orthants.empty(); }
    int orientation_sum() const;
};

struct DegreeReport {
    std::optional<int> degree;
    int trials_used = 0;
    int trials_rejected = 0;
    std::uint64_t seed = 0;
    /// Why `degree` is undefined; empty when it is defined.
    std::string failure;
    std::vector<int> trial_degrees;
    /// Largest number of preimages seen over all sampled right-hand sides.
    std::size_t max_preimages = 0;
};

struct DegreeOptions {
    std::uint64_t seed = 42;
    int trials = 7;
    int max_rejections = 100;
};

/// z - A|z|.
Vector eval_F(const Matrix& a, const Vector& z);

/**
 * All solutions of z - A|z| = b, found orthant by orthant.
 *
 * On orthant S the map is the linear map I - A S. Nonsingular pieces contribute
 * their unique solution when it lies in S. Singular pieces are resolved exactly:
 * a consistent affine solution set meeting S in a single point contributes that
 * point, one meeting S in more is reported through `continuum_orthants`.
 */
SolveReport solve_all(const Matrix& a, const Vector& b, const Tolerances& tol = {});

/**
 * Mapping degree of F_A by oriented preimage counting at random regular values.
 *
 * Right-hand sides are seeded standard normal draws scaled to unit 2-norm. All
 * accepted trials must agree. Undefined when F_A is degenerate, when trials
 * disagree, or when more than `max_rejections` draws are irregular.
 */
DegreeReport degree(const Matrix& a, const Tolerances& tol = {}, const DegreeOptions& options = {});

enum class Direction { contracted, collapsed, reflected };
std::string_view to_string(Direction d);

/// Classifies F_A on an aligning ray w: F_A(w) = (1 - lambda) w and F_A(-w) = -(1 + lambda) w.
/// Throws InvariantBreach if either identity fails numerically.
Direction aligning_direction_check(const Matrix& a, const spectrum::AligningPair& pair,
                                   const Tolerances& tol = {});

struct KernelOrthant {
    bool meets = false;
    bool inconclusive = false;
    /// A nonzero kernel vector inside the orthant, when one exists.
    std::optional<Vector> witness;
};

/// Does ker(M) meet the closed orthant S in a nonzero point?
KernelOrthant kernel_meets_orthant(const Matrix& m, const Signature& s, const Tolerances& tol = {});

/// ker(I - A) and im(I - A) intersect only in 0.
bool ker_im_intersection_trivial(const Matrix& a, const Tolerances& tol = {});

enum class ImageShape { simplicial, pointed_lowdim, line_detected };
std::string_view to_string(ImageShape s);

struct OrthantImage {
    ImageShape shape = ImageShape::simplicial;
    /// For line_detected: nonzero z in the orthant with (I - A S) z = 0.
    std::optional<Vector> certificate;
    bool inconclusive = false;
};

/// Shape of F_A(orthant S): invertible piece, collapsed but pointed, or containing a line.
OrthantImage orthant_image_degeneracy(const Matrix& a, const Signature& s, const Tolerances& tol = {});

}  // namespace avelab::ave
