#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "avelab/ave.hpp"
#include "avelab/errors.hpp"
#include "helpers.hpp"

using namespace avelab;
using testing::mat;
using testing::vec;

namespace {

bool contains_point(const ave::SolveReport& r, const Vector& z, double tol = 1e-9) {
    return std::any_of(r.solutions.begin(), r.solutions.end(),
                       [&](const ave::AveSolution& s) { return (s.z - z).cwiseAbs().maxCoeff() <= tol; });
}

}  // namespace

TEST_SUITE("ave") {
    const Tolerances tol;

    TEST_CASE("eval_F examples") {
        CHECK(ave::eval_F(testing::B, vec({0, 0})) == vec({0, 0}));
        CHECK(ave::eval_F(testing::B, vec({1, 1})) == vec({1, 1}));
        CHECK(ave::eval_F(testing::C, vec({1, -1})) == vec({-1, -3}));
    }

    TEST_CASE("solve_all: B with b = (1,1) has the single interior solution (1,1)") {
        const auto r = ave::solve_all(testing::B, vec({1, 1}), tol);
        REQUIRE(r.solutions.size() == 1);
        CHECK(contains_point(r, vec({1, 1})));
        CHECK_FALSE(r.solutions[0].on_boundary);
        CHECK(r.solutions[0].orientation == 1);
        CHECK(r.b_regular);
    }

    TEST_CASE("solve_all: 2I with b = (-1,-1) has four solutions summing to orientation 0") {
        const auto r = ave::solve_all(testing::C, vec({-1, -1}), tol);
        REQUIRE(r.solutions.size() == 4);
        for (double x : {1.0, -1.0 / 3.0}) {
            for (double y : {1.0, -1.0 / 3.0}) CHECK(contains_point(r, vec({x, y})));
        }
        CHECK(r.orientation_sum() == 0);
        CHECK(r.b_regular);
        std::multiset<int> orientations;
        for (const auto& s : r.solutions) orientations.insert(s.orientation);
        CHECK(orientations == std::multiset<int>{-1, -1, 1, 1});
    }

    TEST_CASE("solve_all: zero matrix returns b") {
        const auto r = ave::solve_all(Matrix::Zero(3, 3), vec({1, -2, 0.5}), tol);
        REQUIRE(r.solutions.size() == 1);
        CHECK(contains_point(r, vec({1, -2, 0.5})));
    }

    TEST_CASE("solve_all: B with b = (0,-1) has a boundary solution and an interior one") {
        const auto r = ave::solve_all(testing::B, vec({0, -1}), tol);
        REQUIRE(r.solutions.size() == 2);
        CHECK(contains_point(r, vec({1, 0})));
        CHECK(contains_point(r, vec({-1, -2})));
        CHECK_FALSE(r.b_regular);
        for (const auto& s : r.solutions) {
            if (s.z[1] == doctest::Approx(0.0)) CHECK(s.on_boundary);
        }
    }

    TEST_CASE("solve_all flags continua on singular orthants") {
        // F_I(z) = z - |z| vanishes on the whole positive orthant.
        const auto r = ave::solve_all(Matrix::Identity(2, 2), vec({0, 0}), tol);
        CHECK(r.continuum());
        CHECK_FALSE(r.b_regular);
    }

    TEST_CASE("degree examples") {
        CHECK(ave::degree(testing::B).degree == 1);
        CHECK(ave::degree(testing::C).degree == 0);
        CHECK(ave::degree(Matrix::Zero(2, 2)).degree == 1);
        CHECK(ave::degree(mat(2, {2, 0, 0, 0.5})).degree == 0);
        const auto id = ave::degree(Matrix::Identity(2, 2));
        CHECK_FALSE(id.degree);
        CHECK(id.failure.find("degenerate") != std::string::npos);
    }

    TEST_CASE("degree is reproducible for a fixed seed") {
        const auto x = ave::degree(testing::B, tol, {.seed = 5});
        const auto y = ave::degree(testing::B, tol, {.seed = 5});
        CHECK(x.trial_degrees == y.trial_degrees);
        CHECK(x.trials_rejected == y.trials_rejected);
        CHECK(x.trials_used == 7);
    }

    TEST_CASE("aligning direction trichotomy") {
        const auto spec_c = spectrum::aligning_spectrum(testing::C);
        REQUIRE_FALSE(spec_c.pairs.empty());
        CHECK(ave::aligning_direction_check(testing::C, spec_c.pairs.front()) == ave::Direction::reflected);
        const auto spec_0 = spectrum::aligning_spectrum(Matrix::Zero(2, 2));
        CHECK(ave::aligning_direction_check(Matrix::Zero(2, 2), spec_0.pairs.front()) == ave::Direction::contracted);
        const auto spec_i = spectrum::aligning_spectrum(Matrix::Identity(2, 2));
        CHECK(ave::aligning_direction_check(Matrix::Identity(2, 2), spec_i.pairs.front()) ==
              ave::Direction::collapsed);
    }

    TEST_CASE("aligning direction identities hold for every pair of random matrices") {
        std::mt19937_64 rng(21);
        for (int k = 0; k < 100; ++k) {
            const Matrix a = oracle::random_gaussian(2 + k % 3, rng);
            for (const auto& p : spectrum::aligning_spectrum(a).pairs) {
                CHECK_NOTHROW(ave::aligning_direction_check(a, p));
            }
        }
    }

    TEST_CASE("kernel_meets_orthant examples") {
        CHECK(ave::kernel_meets_orthant(Matrix::Zero(2, 2), Signature::parse("+-")).meets);
        CHECK_FALSE(ave::kernel_meets_orthant(mat(2, {0, -1, -1, 0}), Signature::parse("+-")).meets);
        const auto k = ave::kernel_meets_orthant(testing::B, Signature::parse("++"));
        CHECK(k.meets);
        REQUIRE(k.witness);
        CHECK((*k.witness - vec({1, 1})).cwiseAbs().maxCoeff() < 1e-12);
        CHECK_FALSE(ave::kernel_meets_orthant(testing::B, Signature::parse("+-")).meets);
        CHECK_FALSE(ave::kernel_meets_orthant(Matrix::Identity(2, 2) - testing::B, Signature::parse("++")).meets);
    }

    TEST_CASE("ker/im intersection examples") {
        CHECK(ave::ker_im_intersection_trivial(mat(2, {1, 0, 0, 0.5})));
        CHECK_FALSE(ave::ker_im_intersection_trivial(mat(2, {1, 1, 0, 1})));
    }

    TEST_CASE("orthant image shape examples") {
        CHECK(ave::orthant_image_degeneracy(testing::B, Signature::parse("+-")).shape == ave::ImageShape::simplicial);
        const auto line = ave::orthant_image_degeneracy(Matrix::Identity(2, 2), Signature::parse("++"));
        CHECK(line.shape == ave::ImageShape::line_detected);
        REQUIRE(line.certificate);
        CHECK(line.certificate->minCoeff() >= 0.0);
        CHECK(ave::orthant_image_degeneracy(Matrix::Zero(2, 2), Signature::parse("-+")).shape ==
              ave::ImageShape::simplicial);
        // B on the positive orthant: I - B = [[0,1],[-1,2]] is invertible.
        CHECK(ave::orthant_image_degeneracy(testing::B, Signature::parse("++")).shape == ave::ImageShape::simplicial);
    }

    TEST_CASE("every returned solution satisfies the equation") {
        std::mt19937_64 rng(31);
        for (int k = 0; k < 200; ++k) {
            const int n = 1 + k % 4;
            const Matrix a = oracle::random_gaussian(n, rng);
            const Vector b = oracle::random_vector(n, rng);
            for (const auto& s : ave::solve_all(a, b, tol).solutions) {
                const double res = linalg::norm_inf(Vector(ave::eval_F(a, s.z) - b));
                CHECK(res <= 1e-8 * linalg::scale(a) * std::max({1.0, linalg::norm_inf(b), linalg::norm_inf(s.z)}));
            }
        }
    }

    TEST_CASE("dimension checks") {
        CHECK_THROWS_AS(ave::solve_all(testing::B, vec({1, 2, 3}), tol), InvalidInput);
    }
}
