#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdwbc/lattice.hpp"
#include "pdwbc/onepoint.hpp"
#include "pdwbc/partition.hpp"
#include "pdwbc/seeded.hpp"

using namespace pdwbc;

namespace {

const Poly kOneMinusT = Poly::from_coeffs({Rational(1), Rational(-1)});

// Finite hypergeometric sum for the Jacobi polynomials at x = 1-2t, with
// generalized binomials so that negative integer parameters are covered:
// P_n^(a,b)(1-2t) = sum_k C(n+a, n-k) C(n+b, k) (-t)^k (1-t)^(n-k).
Rational jacobi_hypergeometric_sum(int n, int alpha, int beta, const Rational& t) {
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        sum += binomial_general(Rational(n + alpha), static_cast<unsigned long>(n - k)) *
               binomial_general(Rational(n + beta), static_cast<unsigned long>(k)) *
               (-t).pow(k) * (Rational(1) - t).pow(n - k);
    }
    return sum;
}

} // namespace

TEST_CASE("g_series closed cases") {
    const Rational t(1, 2);
    // g(m,1) = (1-t) t^(m-1)
    for (int m = 1; m <= 6; ++m) {
        CHECK(g_series(m, 1) == (kOneMinusT * Poly::monomial(Rational(1), m - 1)));
    }
    // g(1,s) = 1 - t^s
    for (int s = 1; s <= 6; ++s) {
        CHECK(g_series(1, s) ==
              Poly(Rational(1)) - Poly::monomial(Rational(1), static_cast<unsigned>(s)));
    }
    CHECK(g_series_at(2, 2, t) == Rational(1, 2));
}

TEST_CASE("g_series displayed form for s = 2") {
    // g(m,2) = (1-t) t^(n-1) { n (1-t)^2 + (1+t) t }, n = m-1
    for (int m = 1; m <= 8; ++m) {
        const long n = m - 1;
        Poly braces = Rational(n) * (kOneMinusT * kOneMinusT);
        braces += Poly::from_coeffs({Rational(0), Rational(1), Rational(1)}); // (1+t)t
        Poly display = kOneMinusT * braces;
        display = n >= 1 ? display.mul_tpow(static_cast<unsigned>(n - 1))
                         : display.div_tpow_exact(1);
        CHECK(display == g_series(m, 2));
    }
}

TEST_CASE("g_series structural invariants") {
    for (int m = 1; m <= 8; ++m) {
        for (int s = 1; s <= 8; ++s) {
            const Poly g = g_series(m, s);
            CHECK(g.degree() <= m + s - 1);
            CHECK(g.eval(Rational(0)) == Rational(m <= s ? 1 : 0));
            CHECK(g.eval(Rational(1)).is_zero()); // factor (1-t)
        }
    }
}

TEST_CASE("residue representation agrees with the series") {
    CHECK(g_residue_homogeneous(1, 1, Rational(1, 2)) == Rational(1, 2));
    CHECK(g_residue_homogeneous(3, 2, Rational(1, 3)) == g_series_at(3, 2, Rational(1, 3)));
    CHECK(g_residue_homogeneous(5, 4, Rational(2, 5)) == g_series_at(5, 4, Rational(2, 5)));
    CHECK_THROWS_AS(g_residue_homogeneous(1, 1, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(g_residue_homogeneous(1, 1, Rational(1)), std::domain_error);
}

TEST_CASE("inhomogeneous semi-infinite residues") {
    const Rational t(1, 2);
    for (int m = 1; m <= 5; ++m) {
        CHECK(g_semiinf_inhomogeneous({t}, m) == (Rational(1) - t) * t.pow(m - 1));
    }
    // confluent limit approaches the homogeneous value
    const Rational exact = g_series_at(2, 2, Rational(1, 4));
    Rational prev;
    bool first = true;
    for (long k : {3L, 6L}) {
        const Rational eps = Rational(1, 10).pow(k);
        const Rational gap =
            (g_semiinf_inhomogeneous({Rational(1, 4), Rational(1, 4) + eps}, 2) - exact).abs();
        if (!first) CHECK(gap < prev);
        prev = gap;
        first = false;
    }
    // sum rule tail at fixed distinct parameters
    const std::vector<Rational> rows{Rational(1, 4), Rational(1, 3)};
    Rational sum(0);
    Rational gap_at_10;
    for (int m = 1; m <= 25; ++m) {
        sum += g_semiinf_inhomogeneous(rows, m);
        if (m == 10) gap_at_10 = (sum - Rational(2)).abs();
    }
    CHECK((sum - Rational(2)).abs() < gap_at_10);
    CHECK_THROWS_AS(g_semiinf_inhomogeneous({Rational(1, 4), Rational(1, 4)}, 1),
                    degenerate_input_error);
}

TEST_CASE("finite-N representation equals the enumeration oracle") {
    // s = N: every column carries a down arrow
    // ({1/5, 1/2, 2/3} would pinch: 1 - 2(2/3) + (2/3)(1/2) = 0)
    const std::vector<Rational> dw{Rational(1, 5), Rational(1, 2), Rational(3, 4)};
    for (int m = 1; m <= 3; ++m) CHECK(g_finite_n(dw, 3, m) == Rational(1));

    const std::vector<Rational> rows{Rational(1, 5), Rational(1, 2)};
    const auto spec = LatticeSpec::partial_homogeneous(rows, 3);
    for (int m = 1; m <= 3; ++m) {
        CHECK(g_finite_n(rows, 3, m) == g_down_bruteforce(spec, m));
    }
    // hand value: s=1, N=2, m=1 -> 1/(1+t)
    CHECK(g_finite_n({Rational(1, 2)}, 2, 1) == Rational(2, 3));

    CHECK_THROWS_AS(g_finite_n({Rational(1, 3), Rational(1, 3)}, 3, 1), degenerate_input_error);
    CHECK_THROWS_AS(g_finite_n(rows, 3, 4), std::invalid_argument);
}

TEST_CASE("residue at w = 1 reproduces the partition function") {
    SeededRng rng(21);
    for (int s = 1; s <= 4; ++s) {
        const auto rows = rng.distinct_unit_rationals(s);
        for (int n = s; n <= s + 2; ++n) {
            CHECK(finite_n_residue_at_one(rows, n) == z_partial_homogeneous(rows, n));
        }
    }
}

TEST_CASE("jacobi evaluation against the hypergeometric sum") {
    CHECK(jacobi_eval(0, 3, -2, Rational(1, 3)) == Rational(1));
    // Legendre case: P_1(1-2t) = 1-2t
    for (const auto& t : {Rational(1, 3), Rational(2, 5)}) {
        CHECK(jacobi_eval(1, 0, 0, t) == Rational(1) - Rational(2) * t);
    }
    // two-route agreement including negative beta down to n+beta = -1
    for (int n = 0; n <= 4; ++n) {
        for (int alpha = -2; alpha <= 2; ++alpha) {
            if (n + alpha < 0) continue;
            for (int beta = -n - 1; beta <= 2; ++beta) {
                const Rational t(1, 3);
                CHECK(jacobi_eval(n, alpha, beta, t) ==
                      jacobi_hypergeometric_sum(n, alpha, beta, t));
            }
        }
    }
    CHECK_THROWS_AS(jacobi_eval(1, 1, 0, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(jacobi_eval(1, 0, 1, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(jacobi_eval(1, -3, 0, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("jacobi-sum representation of g") {
    CHECK(g_jacobi(1, 1, Rational(1, 2)) == Rational(1, 2));
    CHECK(g_jacobi(4, 3, Rational(1, 3)) == g_series_at(4, 3, Rational(1, 3)));
    CHECK(g_jacobi(2, 5, Rational(2, 3)) == g_series_at(2, 5, Rational(2, 3)));
}

TEST_CASE("coordinate Bethe form of the fixed-exit partition function") {
    const Rational t(2, 5);
    for (int r = 1; r <= 4; ++r) {
        CHECK(z_exit_coordinate(ExitPattern({r}), {t}) == (Rational(1) - t) * t.pow(r - 1));
    }
    {
        const ExitPattern pattern({1, 2});
        const std::vector<Rational> rows{Rational(1, 4), Rational(1, 2)};
        CHECK(z_exit_coordinate(pattern, rows) ==
              z_exitpattern_bruteforce(LatticeSpec::partial_homogeneous(rows, 2), pattern));
    }
    {
        const ExitPattern pattern({2, 4});
        const std::vector<Rational> rows{Rational(2, 7), Rational(3, 5)};
        CHECK(z_exit_coordinate(pattern, rows) ==
              z_exitpattern_bruteforce(LatticeSpec::partial_homogeneous(rows, 4), pattern));
    }
    CHECK_THROWS_AS(z_exit_coordinate(ExitPattern({1, 2}), {Rational(1, 3), Rational(1, 3)}),
                    degenerate_input_error);
}

TEST_CASE("homogeneous multiple-integral residue and its normalization") {
    const Rational t(1, 2);
    // the bare residue at s = 1 gives t^(r-1); the c-weights restore the oracle value
    for (int r = 1; r <= 4; ++r) {
        CHECK(z_exit_residue_raw(ExitPattern({r}), t) == t.pow(r - 1));
        CHECK(z_exit_homogeneous(ExitPattern({r}), t) == (Rational(1) - t) * t.pow(r - 1));
    }
    {
        const ExitPattern pattern({1, 2});
        CHECK(z_exit_homogeneous(pattern, t) ==
              z_exitpattern_bruteforce(LatticeSpec::homogeneous(2, 2, t), pattern));
    }
    // reconciliation factor (1-t)^s is pattern-independent at fixed s
    for (int s = 1; s <= 3; ++s) {
        std::vector<int> base{1, 3, 5};
        std::vector<int> cols(base.begin(), base.begin() + s);
        const ExitPattern pattern(cols);
        const auto spec = LatticeSpec::homogeneous(s, pattern.last(), t);
        const Rational oracle = z_exitpattern_bruteforce(spec, pattern);
        CHECK(oracle == (Rational(1) - t).pow(s) * z_exit_residue_raw(pattern, t));
    }
    CHECK_THROWS_AS(z_exit_residue_raw(ExitPattern({1, 2, 3, 4, 5, 6}), t), resource_error);
}

TEST_CASE("exit-pattern decomposition of g") {
    const Rational t(1, 2);
    // s = 1 degenerates to the single pattern
    CHECK(g_from_exit_sum(3, 1, t, 10) == (Rational(1) - t) * t.pow(2));
    // frozen tails of the truncated sum (tail terms (r+3) 2^-(r+2))
    const Rational exact = g_series_at(1, 2, t);
    CHECK(exact - g_from_exit_sum(1, 2, t, 12) == Rational(17, 16384));
    CHECK(exact - g_from_exit_sum(1, 2, t, 13) == Rational(9, 16384));
    // finite-N version is exact: restricted pattern sum over {1..N}
    const auto spec = LatticeSpec::homogeneous(2, 4, t);
    const Rational z = z_bruteforce(spec);
    for (int m = 1; m <= 4; ++m) {
        Rational sum(0);
        for (int a = 1; a <= 4; ++a) {
            for (int b = a + 1; b <= 4; ++b) {
                if (a != m && b != m) continue;
                sum += z_exitpattern_bruteforce(spec, ExitPattern({a, b}));
            }
        }
        CHECK(sum / z == g_down_bruteforce(spec, m));
    }
    CHECK_THROWS_AS(g_from_exit_sum(1, 5, t, 8), resource_error);
    CHECK_THROWS_AS(g_from_exit_sum(9, 2, t, 8), std::invalid_argument);
}

TEST_CASE("terminating 2F1") {
    CHECK(hyp2f1_terminating(0, 5, 3, Rational(7, 2)) == Rational(1));
    const Rational z(3, 4);
    CHECK(hyp2f1_terminating(-1, -1, 1, z) == Rational(1) + z);
    CHECK(hyp2f1_terminating(-2, -1, 2, z) == Rational(1) + z);
    CHECK_THROWS_AS(hyp2f1_terminating(1, 2, 3, z), std::domain_error);
    // pole: c nonpositive and reached before a terminates
    CHECK_THROWS_AS(hyp2f1_terminating(-3, 5, -1, z), std::domain_error);
}

TEST_CASE("finite-difference closed forms equal literal differences") {
    // delta_s(m,1) = g(m,1) with g(m,0) := 0
    for (int m = 1; m <= 6; ++m) CHECK(delta_s(m, 1) == g_series(m, 1));
    CHECK(delta_s(3, 2) == g_series(3, 2) - g_series(3, 1));
    for (int m = 1; m <= 8; ++m) {
        for (int s = 1; s <= 8; ++s) {
            const Poly literal = s == 1 ? g_series(m, 1) : g_series(m, s) - g_series(m, s - 1);
            CHECK(delta_s(m, s) == literal);
            if (m >= 2) CHECK(delta_m(m, s) == g_series(m, s) - g_series(m - 1, s));
        }
    }
    CHECK_THROWS_AS(delta_m(1, 3), std::domain_error);
}

TEST_CASE("ode coefficient table at the hand-checkable point") {
    const auto [a, b, c] = ode_coefficients(Rational(1), Rational(1));
    const Poly om2t = Poly::from_coeffs({Rational(1), Rational(-2)});
    CHECK(a == kOneMinusT * om2t * Poly::monomial(Rational(1), 2));
    CHECK(b == Rational(2) * (om2t * om2t).mul_tpow(1));
    CHECK(c.is_zero());
}

TEST_CASE("ode residual vanishes identically") {
    CHECK(ode_residual(1, 1).is_zero());
    CHECK(ode_residual(3, 2).is_zero());
    CHECK(ode_residual(6, 5).is_zero());
    for (int m = 1; m <= 8; ++m) {
        for (int s = 1; s <= 8; ++s) CHECK(ode_residual(m, s).is_zero());
    }
}
