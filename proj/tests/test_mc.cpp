#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdwbc/mc.hpp"
#include "pdwbc/onepoint.hpp"

#include <cmath>
#include <sstream>

using namespace pdwbc;

TEST_CASE("t = 0 walks the deterministic staircase") {
    // Every line turns immediately; line j exits at column j.
    const auto result = mc_sample_exits(3, 0.0, 500, 42);
    CHECK(result.n_flagged == 0);
    REQUIRE(result.columns.size() == 3);
    for (int m = 1; m <= 3; ++m) {
        CHECK(result.columns[m - 1].count == 500);
        CHECK(result.columns[m - 1].estimate == 1.0);
    }
}

TEST_CASE("single line exits geometrically") {
    const auto result = mc_sample_exits(1, 0.5, 100000, 31);
    CHECK(result.n_flagged == 0);
    for (int m = 1; m <= 10; ++m) {
        const double exact = std::pow(0.5, m);
        const double se = std::sqrt(exact * (1.0 - exact) / 100000.0);
        const double estimate =
            m <= static_cast<int>(result.columns.size()) ? result.columns[m - 1].estimate : 0.0;
        CHECK(std::fabs(estimate - exact) <= 4.0 * se);
    }
}

TEST_CASE("three lines match the exact one-point function") {
    const Rational t(1, 2);
    const auto result = mc_sample_exits(3, 0.5, 100000, 27, 4);
    for (int m = 1; m <= 12; ++m) {
        const double exact = g_series_at(m, 3, t).to_double();
        const double se = std::sqrt(exact * (1.0 - exact) / 100000.0);
        const double estimate =
            m <= static_cast<int>(result.columns.size()) ? result.columns[m - 1].estimate : 0.0;
        CHECK(std::fabs(estimate - exact) <= 4.0 * se);
    }
}

TEST_CASE("same seed and workers reproduce the histogram exactly") {
    const auto a = mc_sample_exits(2, 0.25, 20000, 9, 3);
    const auto b = mc_sample_exits(2, 0.25, 20000, 9, 3);
    REQUIRE(a.columns.size() == b.columns.size());
    for (size_t i = 0; i < a.columns.size(); ++i) {
        CHECK(a.columns[i].count == b.columns[i].count);
    }
    CHECK(a.n_flagged == b.n_flagged);
}

TEST_CASE("histogram csv carries the schema header") {
    const auto result = mc_sample_exits(1, 0.5, 100, 1);
    std::ostringstream os;
    write_histogram_csv(os, result);
    const std::string text = os.str();
    CHECK(text.rfind("# schema=1\nm,count,estimate,stderr\n", 0) == 0);
}

TEST_CASE("sampler input validation") {
    CHECK_THROWS_AS(mc_sample_exits(0, 0.5, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_sample_exits(1, 1.0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(mc_sample_exits(1, -0.1, 10, 1), std::domain_error);
    CHECK_THROWS_AS(mc_sample_exits(1, 0.5, 10, 1, 0), std::invalid_argument);
}
