#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdwbc/lattice.hpp"
#include "pdwbc/seeded.hpp"

using namespace pdwbc;

namespace {

std::vector<ExitPattern> all_patterns(int s, int n) {
    std::vector<ExitPattern> out;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i + 1;
    while (true) {
        out.emplace_back(idx);
        int i = s - 1;
        while (i >= 0 && idx[i] == n - s + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace

TEST_CASE("single vertex is the turn vertex with weight c") {
    const Rational t(1, 3);
    CHECK(z_bruteforce(LatticeSpec::homogeneous(1, 1, t)) == Rational(1) - t);
    // inhomogeneous: c(lambda,nu) = 1/(lambda - nu + 1)
    const auto spec = LatticeSpec::inhomogeneous({Rational(5, 2)}, {Rational(1)});
    CHECK(z_bruteforce(spec) == Rational(2, 5));
}

TEST_CASE("1 x 2 strip sums its two exit configurations") {
    const Rational t(2, 7);
    CHECK(z_bruteforce(LatticeSpec::homogeneous(1, 2, t)) == Rational(1) - t * t);
}

TEST_CASE("single-line exit pattern runs b-vertices then turns") {
    const Rational t(3, 5);
    for (int r = 1; r <= 5; ++r) {
        const auto spec = LatticeSpec::homogeneous(1, 5, t);
        CHECK(z_exitpattern_bruteforce(spec, ExitPattern({r})) ==
              (Rational(1) - t) * t.pow(r - 1));
    }
}

TEST_CASE("exit patterns partition the configuration set") {
    const Rational t(1, 2);
    for (int s = 1; s <= 3; ++s) {
        for (int n = s; n <= 5; ++n) {
            const auto spec = LatticeSpec::homogeneous(s, n, t);
            Rational sum(0);
            for (const auto& pattern : all_patterns(s, n)) {
                sum += z_exitpattern_bruteforce(spec, pattern);
            }
            CHECK(sum == z_bruteforce(spec));
        }
    }
}

TEST_CASE("s = N forces the unique domain-wall exit pattern") {
    const Rational t(1, 2);
    const auto spec = LatticeSpec::homogeneous(2, 2, t);
    CHECK(z_exitpattern_bruteforce(spec, ExitPattern({1, 2})) == z_bruteforce(spec));
}

TEST_CASE("exit patterns are independent of N beyond the last exit") {
    const Rational t(2, 5);
    const ExitPattern pattern({2, 4});
    const Rational at_n4 =
        z_exitpattern_bruteforce(LatticeSpec::homogeneous(2, 4, t), pattern);
    const Rational at_n6 =
        z_exitpattern_bruteforce(LatticeSpec::homogeneous(2, 6, t), pattern);
    CHECK(at_n4 == at_n6);
}

TEST_CASE("one-point function at DWBC is identically one") {
    const Rational t(1, 3);
    for (int n = 1; n <= 5; ++n) {
        const auto spec = LatticeSpec::homogeneous(n, n, t);
        for (int m = 1; m <= n; ++m) CHECK(g_down_bruteforce(spec, m) == Rational(1));
    }
}

TEST_CASE("one-point function on the 1 x 2 strip") {
    const Rational t(1, 2);
    const auto spec = LatticeSpec::homogeneous(1, 2, t);
    CHECK(g_down_bruteforce(spec, 1) == (Rational(1) + t).inv());
}

TEST_CASE("one-point function satisfies the sum rule and stays in [0,1]") {
    const auto spec = LatticeSpec::homogeneous(2, 4, Rational(1, 3));
    Rational sum(0);
    for (int m = 1; m <= 4; ++m) {
        const Rational g = g_down_bruteforce(spec, m);
        CHECK(g >= Rational(0));
        CHECK(g <= Rational(1));
        sum += g;
    }
    CHECK(sum == Rational(2));
}

TEST_CASE("inhomogeneous oracle matches over seeded parameters row by row") {
    SeededRng rng(5);
    const auto spec = LatticeSpec::inhomogeneous(
        {Rational(3), Rational(7, 2)}, {Rational(0), Rational(1, 2), Rational(5, 4)});
    Rational sum(0);
    for (int m = 1; m <= 3; ++m) sum += g_down_bruteforce(spec, m);
    CHECK(sum == Rational(2));
}

TEST_CASE("lattice guards and validation") {
    CHECK_THROWS_AS(LatticeSpec::homogeneous(3, 2, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(LatticeSpec::homogeneous(1, 1, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(LatticeSpec::homogeneous(1, 1, Rational(-1, 2)), std::domain_error);
    // lambda - nu = -1 puts a pole in the weights
    CHECK_THROWS_AS(LatticeSpec::inhomogeneous({Rational(0)}, {Rational(1)}), std::domain_error);
    // lambda = nu is degenerate (b = 0) but admissible
    CHECK(z_bruteforce(LatticeSpec::inhomogeneous({Rational(1)}, {Rational(1)})) == Rational(1));
    CHECK_THROWS_AS(z_bruteforce(LatticeSpec::homogeneous(2, 8, Rational(1, 2))), resource_error);
    CHECK_THROWS_AS(z_bruteforce(LatticeSpec::homogeneous(5, 7, Rational(1, 2))), resource_error);
    const auto spec = LatticeSpec::homogeneous(2, 3, Rational(1, 2));
    CHECK_THROWS_AS(g_down_bruteforce(spec, 4), std::invalid_argument);
    CHECK_THROWS_AS(z_exitpattern_bruteforce(spec, ExitPattern({1, 2, 3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExitPattern({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ExitPattern({3, 1}), std::invalid_argument);
}
