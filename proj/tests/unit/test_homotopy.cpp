#include <doctest.h>

#include <cmath>
#include <numbers>

#include "avelab/errors.hpp"
#include "avelab/homotopy.hpp"
#include "helpers.hpp"

using namespace avelab;
using testing::mat;
using testing::vec;

TEST_SUITE("homotopy") {
    TEST_CASE("eval_H examples") {
        CHECK(homotopy::eval_H(testing::B, vec({0.3, -2}), 0.0) == vec({0.3, -2}));
        CHECK(homotopy::eval_H(testing::B, vec({1, 1}), 1.0) == vec({1, 1}));
        const Vector h = homotopy::eval_H(testing::C, vec({1, 0}), 0.4);
        CHECK(h[0] == doctest::Approx(0.2));
        CHECK(h[1] == 0.0);
        CHECK_THROWS_AS(homotopy::eval_H(testing::B, vec({1, 1}), -0.1), InvalidInput);
    }

    TEST_CASE("properness breakpoints") {
        const auto c = homotopy::properness_breakpoints(testing::C);
        REQUIRE(c.breakpoints.size() == 1);
        CHECK(std::abs(c.breakpoints[0] - 0.5) <= 1e-9);
        const auto b = homotopy::properness_breakpoints(testing::B);
        CHECK(b.breakpoints.empty());
        CHECK(b.has_zero_aligning_value);
        const auto i = homotopy::properness_breakpoints(Matrix::Identity(2, 2));
        REQUIRE(i.breakpoints.size() == 1);
        CHECK(i.breakpoints[0] == doctest::Approx(1.0));
        const auto d = homotopy::properness_breakpoints(testing::D(0.0));
        REQUIRE(d.breakpoints.size() == 2);
        CHECK(d.breakpoints[0] < d.breakpoints[1]);
    }

    TEST_CASE("degree profiles") {
        auto p = homotopy::degree_profile(testing::C, {0.4, 1.0});
        REQUIRE(p.size() == 2);
        CHECK(p[0].degree == 1);
        CHECK(p[1].degree == 0);
        p = homotopy::degree_profile(testing::B, {0.4, 1.0});
        CHECK(p[0].degree == 1);
        CHECK(p[1].degree == 1);
        for (const auto& q : homotopy::degree_profile(Matrix::Zero(3, 3), {0.1, 1.0, 7.0})) CHECK(q.degree == 1);
        // Exactly at the breakpoint the map is degenerate.
        p = homotopy::degree_profile(testing::C, {0.5});
        CHECK_FALSE(p[0].degree);
    }

    TEST_CASE("circle trace sampling") {
        const auto trace = homotopy::circle_trace(testing::B, 0.0, 64);
        REQUIRE(trace.samples.size() == 64);
        for (std::size_t k = 0; k < trace.samples.size(); ++k) {
            const auto& s = trace.samples[k];
            CHECK(s.theta == doctest::Approx(2.0 * std::numbers::pi * static_cast<double>(k) / 64.0));
            CHECK((s.image - s.point).norm() == 0.0);
            if (k > 0) CHECK(s.theta > trace.samples[k - 1].theta);
        }
        CHECK_THROWS_AS(homotopy::circle_trace(Matrix::Identity(3, 3), 1.0), DimensionMismatch);
        CHECK_THROWS_AS(homotopy::circle_trace(testing::B, 1.0, 8), InvalidInput);
    }

    TEST_CASE("winding numbers of the example traces") {
        CHECK(homotopy::winding_number(homotopy::circle_trace(Matrix::Zero(2, 2), 1.0)) == 1);
        CHECK(homotopy::winding_number(homotopy::circle_trace(testing::B, 1.0)) == 1);
        CHECK(homotopy::winding_number(homotopy::circle_trace(testing::B, 0.4)) == 1);
        CHECK(homotopy::winding_number(homotopy::circle_trace(testing::C, 0.4)) == 1);
        CHECK(homotopy::winding_number(homotopy::circle_trace(testing::C, 1.0)) == 0);
        // z - |z| vanishes on the positive quadrant, so the image passes through the origin.
        CHECK_FALSE(homotopy::winding_number(homotopy::circle_trace(Matrix::Identity(2, 2), 1.0)));
    }
}
