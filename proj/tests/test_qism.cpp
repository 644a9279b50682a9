#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdwbc/lattice.hpp"
#include "pdwbc/qism.hpp"
#include "pdwbc/seeded.hpp"

using namespace pdwbc;

TEST_CASE("L-operator entries") {
    // lambda - nu = 1: b = c = 1/2, so L = (Id + P)/2
    const RMatrix l = build_L(Rational(2), Rational(1));
    CHECK(l.at(0, 0) == Rational(1));
    CHECK(l.at(1, 1) == Rational(1, 2));
    CHECK(l.at(1, 2) == Rational(1, 2));
    CHECK(l.at(2, 1) == Rational(1, 2));
    CHECK(l.at(3, 3) == Rational(1));

    const RMatrix l20 = build_L(Rational(2), Rational(0));
    CHECK(l20.at(1, 1) == Rational(2, 3));
    CHECK(l20.at(1, 2) == Rational(1, 3));

    // lambda = nu gives b = 0: degenerate but admissible
    const RMatrix l_eq = build_L(Rational(1), Rational(1));
    CHECK(l_eq.at(1, 1) == Rational(0));
    CHECK(l_eq.at(1, 2) == Rational(1));

    CHECK_THROWS_AS(build_L(Rational(0), Rational(1)), std::domain_error);
}

TEST_CASE("R-matrix functions") {
    CHECK(f_fun(Rational(2), Rational(1)) == Rational(2));
    CHECK(g_fun(Rational(2), Rational(1)) == Rational(1));
    CHECK_THROWS_AS(g_fun(Rational(1), Rational(1)), std::domain_error);
    SeededRng rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto p = rng.distinct_small_rationals(2);
        CHECK(f_fun(p[0], p[1]) - g_fun(p[0], p[1]) == Rational(1));
    }
}

TEST_CASE("RLL intertwining relation") {
    CHECK(verify_rll(Rational(5), Rational(1), Rational(2)));
    CHECK(verify_rll(Rational(7, 2), Rational(0), Rational(1, 3)));
    CHECK_THROWS_AS(verify_rll(Rational(5), Rational(1), Rational(1)), std::domain_error);
}

TEST_CASE("A/B operator algebra") {
    // single factor: 2x2 blocks
    CHECK(verify_ab_algebra({Rational(3)}, Rational(0), Rational(1)));
    // two factors with generic rapidities
    CHECK(verify_ab_algebra({Rational(3), Rational(7, 2)}, Rational(0), Rational(1)));
    // three factors, seeded rationals
    CHECK(verify_ab_algebra({Rational(5, 3), Rational(-7, 4), Rational(9, 2)}, Rational(1, 5),
                            Rational(-3, 2)));
    CHECK_THROWS_AS(verify_ab_algebra({Rational(3)}, Rational(1), Rational(1)),
                    std::domain_error);
    CHECK_THROWS_AS(
        verify_ab_algebra(std::vector<Rational>(5, Rational(2)), Rational(0), Rational(1)),
        resource_error);
}

TEST_CASE("RTT relation and gl2 invariance") {
    const std::vector<Rational> lambdas{Rational(2), Rational(7, 3), Rational(-1, 2)};
    CHECK(verify_rtt(lambdas, Rational(1, 3), Rational(-16, 19)));
    SeededRng rng(17);
    for (int i = 0; i < 5; ++i) {
        RMatrix kl(2), kr(2);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                kl.at(r, c) = rng.small_rational();
                kr.at(r, c) = rng.small_rational();
            }
        }
        CHECK(verify_rtt(lambdas, Rational(1, 3), Rational(-16, 19), kl, kr));
    }
    CHECK_THROWS_AS(verify_rtt(lambdas, Rational(0), Rational(1), RMatrix(3), RMatrix(2)),
                    std::invalid_argument);
}

TEST_CASE("bracket formula reproduces the oracle") {
    // single vertex
    CHECK(z_bracket(LatticeSpec::inhomogeneous({Rational(5, 2)}, {Rational(1)})) ==
          Rational(2, 5));
    // 1 x 2 homogeneous
    const Rational t(1, 2);
    CHECK(z_bracket(LatticeSpec::homogeneous(1, 2, t)) == Rational(1) - t * t);
    // 2 x 3 with random rationals
    const auto spec = LatticeSpec::inhomogeneous({Rational(2), Rational(5, 2)},
                                                 {Rational(0), Rational(1, 3), Rational(1)});
    CHECK(z_bracket(spec) == z_bruteforce(spec));
    // full grid of small specs
    for (int s = 1; s <= 4; ++s) {
        for (int n = s; n <= 4; ++n) {
            const auto hom = LatticeSpec::homogeneous(s, n, Rational(2, 5));
            CHECK(z_bracket(hom) == z_bruteforce(hom));
        }
    }
    CHECK_THROWS_AS(z_bracket(LatticeSpec::homogeneous(2, 9, Rational(1, 2))), resource_error);
}

TEST_CASE("monodromy blocks compose as a transfer step") {
    // For a single factor the blocks are the L-operator blocks themselves.
    const auto t = build_monodromy({{Rational(2, 3), Rational(1, 3)}});
    CHECK(t.a.at(0, 0) == Rational(1));
    CHECK(t.a.at(1, 1) == Rational(2, 3));
    CHECK(t.b.at(1, 0) == Rational(1, 3));
    CHECK(t.c.at(0, 1) == Rational(1, 3));
    CHECK(t.d.at(0, 0) == Rational(2, 3));
    CHECK(t.d.at(1, 1) == Rational(1));
}
