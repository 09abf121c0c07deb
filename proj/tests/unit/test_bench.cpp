#include <doctest.h>

#include "../support/oracles.hpp"
#include "avelab/bench.hpp"
#include "avelab/errors.hpp"
#include "avelab/spectrum.hpp"
#include "helpers.hpp"

using namespace avelab;
using report::Json;

TEST_SUITE("bench") {
    TEST_CASE("families are deterministic per seed") {
        const bench::FamilySpec spec{bench::Family::gaussian, 2, 3, std::nullopt, 1};
        const auto x = bench::generate(spec);
        const auto y = bench::generate(spec);
        REQUIRE(x.matrices.size() == 3);
        for (int k = 0; k < 3; ++k) CHECK(x.matrices[k] == y.matrices[k]);
        const auto z = bench::generate({bench::Family::gaussian, 2, 3, std::nullopt, 2});
        CHECK(z.matrices[0] != x.matrices[0]);
    }

    TEST_CASE("scaled family hits the target aligning radius") {
        const auto fam = bench::generate({bench::Family::scaled_to_rho_a, 3, 20, 0.9, 5});
        for (const auto& a : fam.matrices) CHECK(std::abs(spectrum::rho_a(a) - 0.9) <= 1e-6);
    }

    TEST_CASE("nonnegative and positive-simple families") {
        for (const auto& a : bench::generate({bench::Family::nonneg, 3, 20, std::nullopt, 6}).matrices) {
            CHECK(a.minCoeff() >= 0.0);
        }
        const auto fam = bench::generate({bench::Family::positive_simple, 2, 10, 1.2, 7});
        for (const auto& a : fam.matrices) {
            CHECK(a.minCoeff() > 0.0);
            CHECK(std::abs(oracle::perron_power(a) - 1.2) <= 1e-9);
            CHECK(spectrum::simplicity(a).is_simple);
        }
    }

    TEST_CASE("family validation") {
        CHECK_THROWS_AS(bench::generate({bench::Family::scaled_to_rho_a, 2, 1, std::nullopt, 1}), InvalidInput);
        CHECK_THROWS_AS(bench::generate({bench::Family::gaussian, 2, 0, std::nullopt, 1}), InvalidInput);
        CHECK_THROWS_AS(bench::parse_family("cauchy"), InvalidInput);
        CHECK(bench::parse_family("nonneg") == bench::Family::nonneg);
        // A Perron root of 0.5 can never satisfy the rho_a > 1 filter.
        const bench::FamilySpec hopeless{bench::Family::positive_simple, 2, 1, 0.5, 1, 20};
        CHECK_THROWS_AS(bench::generate(hopeless), NumericFailure);
    }

    TEST_CASE("Perron root by power iteration matches the oracle") {
        std::mt19937_64 rng(91);
        for (int k = 0; k < 50; ++k) {
            const Matrix a = oracle::random_uniform(1 + k % 5, rng);
            CHECK(std::abs(bench::perron_root(a) - oracle::perron_power(a)) <= 1e-10);
        }
        CHECK_THROWS_AS(bench::perron_root(testing::B), InvalidInput);
    }

    TEST_CASE("unknown suites and instances are refused") {
        CHECK_THROWS_AS(bench::run_suite("nope"), InvalidInput);
        CHECK_THROWS_AS(bench::check_instance(Json::object()), InvalidInput);
    }

    TEST_CASE("instances replay: 2I violates the odd-count property") {
        // 2I has rho_a = 2 > 1, so the odd-count theorem does not apply and the check must fail.
        const Json inst = {{"suite", "odd-count"},
                           {"matrix", report::to_json(testing::C)},
                           {"b", report::to_json(testing::vec({-1, -1}))}};
        const auto first = bench::check_instance(inst);
        CHECK(first.status == bench::Status::fail);
        CHECK(first.detail["count"] == 4);
        const auto again = bench::check_instance(Json::parse(report::dump(inst)));
        CHECK(again.status == first.status);
        CHECK(report::dump(again.detail) == report::dump(first.detail));
    }

    TEST_CASE("a small suite runs clean and its report is stable") {
        const auto x = bench::run_suite("ker-im", 3);
        CHECK(x.ok());
        CHECK(x.passed == 50);
        CHECK(report::dump(x.to_json()) == report::dump(bench::run_suite("ker-im", 3).to_json()));
    }
}
