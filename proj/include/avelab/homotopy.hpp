#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "avelab/ave.hpp"
#include "avelab/linalg.hpp"

namespace avelab::homotopy {

/// Parameters t = 1/lambda at which z - tA|z| stops being proper, one per positive aligning value.
struct PropernessBreakpoints {
    std::vector<double> breakpoints;  // strictly ascending, all > 0
    bool has_zero_aligning_value = false;
};

struct TraceSample {
    double theta = 0.0;
    Eigen::Vector2d point;  // (cos theta, sin theta)
    Eigen::Vector2d image;  // H_A(point, t)
};

struct CircleTrace {
    double t = 0.0;
    std::vector<TraceSample> samples;  // theta = 2 pi k / m, k = 0..m-1
    bool closed = true;
};

struct ProfilePoint {
    double t = 0.0;
    std::optional<int> degree;
    std::string failure;
};

/// z - t A|z|.
Vector eval_H(const Matrix& a, const Vector& z, double t);

PropernessBreakpoints properness_breakpoints(const Matrix& a, const Tolerances& tol = {});

/// degree(tA) for each t; undefined where tA is degenerate.
std::vector<ProfilePoint> degree_profile(const Matrix& a, const std::vector<double>& ts,
                                         const Tolerances& tol = {}, const ave::DegreeOptions& options = {});

/// Samples the image of the unit circle under H_A(., t). Needs a 2x2 matrix and m >= 16.
/// Keep m divisible by 4 so the quadrant corners, where the map changes pieces, are sampled.
CircleTrace circle_trace(const Matrix& a, double t, std::size_t m = 360);

/**
 * Winding number of the closed sampled image curve about the origin.
 *
 * Sums the wrapped angle increments between consecutive samples, closing the
 * loop. Undefined when a sample lies within `tol.boundary` of the origin, when
 * a single step turns by (nearly) half a circle, or when the total is not
 * within 0.01 of an integer.
 */
std::optional<int> winding_number(const CircleTrace& trace, const Tolerances& tol = {});

}  // namespace avelab::homotopy
