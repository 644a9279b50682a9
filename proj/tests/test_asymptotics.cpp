#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdwbc/asymptotics.hpp"
#include "pdwbc/onepoint.hpp"
#include "pdwbc/seeded.hpp"

#include <cmath>

using namespace pdwbc;

namespace {

double uniform_in(SeededRng& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng.raw() >> 11) * 0x1.0p-53;
}

} // namespace

TEST_CASE("saddle points") {
    {
        const auto [zm, zp] = saddle_points(1.0, 0.7);
        CHECK(zp == doctest::Approx(1.0));
        CHECK(zm == doctest::Approx(-1.0));
    }
    {
        const auto [zm, zp] = saddle_points(2.0, 1.0);
        CHECK(zp == doctest::Approx(0.5));
        CHECK(zm == doctest::Approx(-1.0));
    }
    SeededRng rng(61);
    for (int i = 0; i < 50; ++i) {
        const double mu = uniform_in(rng, 0.2, 3.0);
        const double lam = uniform_in(rng, 0.2, 2.0);
        const auto [zm, zp] = saddle_points(mu, lam);
        CHECK(zm < 0.0);
        CHECK(zp > 0.0);
        const auto quadratic = [&](double z) { return mu * (1.0 + lam * z) * z - (lam + z); };
        CHECK(std::fabs(quadratic(zp)) < 1e-12);
        CHECK(std::fabs(quadratic(zm)) < 1e-12);
        CHECK(std::fabs(saddle_fprime(mu, lam, zp)) < 1e-12);
        CHECK(saddle_fsecond(mu, lam, zp) > 0.0);
    }
    CHECK_THROWS_AS(saddle_points(0.0, 1.0), std::domain_error);
}

TEST_CASE("rate functions") {
    CHECK(phi1(2.0, 0.5) > 0.0);
    // phi1 -> 0 as mu -> 1
    CHECK(phi1(1.0 + 1e-4, 0.5) < 1e-6);
    CHECK(phi1(1.0 - 1e-4, 0.5) < 1e-6);
    CHECK_THROWS_AS(phi1(1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(phi0(1.0, 0.5), std::domain_error);

    // phi1 = -F(z+) at the positive saddle
    SeededRng rng(62);
    for (int i = 0; i < 20; ++i) {
        double mu = uniform_in(rng, 0.2, 3.0);
        if (std::fabs(mu - 1.0) < 0.05) mu += 0.1;
        const double t = uniform_in(rng, 0.1, 0.9);
        const double lam = t / (1.0 - t);
        const auto [zm, zp] = saddle_points(mu, lam);
        (void)zm;
        CHECK(phi1(mu, t) == doctest::Approx(-saddle_f(mu, lam, zp)).epsilon(1e-12));
    }
}

TEST_CASE("asymptotic estimate fields") {
    const auto below = g_asymptotic(50, 100, 1.0 / 3.0);
    CHECK(below.leading == 1.0);
    CHECK(below.sign == -1);
    const auto above = g_asymptotic(200, 100, 1.0 / 3.0);
    CHECK(above.leading == 0.0);
    CHECK(above.sign == 1);
    CHECK(std::isfinite(above.log_correction));
    CHECK_THROWS_AS(g_asymptotic(105, 100, 0.5), std::domain_error);
    CHECK_THROWS_AS(g_asymptotic(10, 5, 0.5), std::domain_error);
}

TEST_CASE("log-asymptotics against exact big-rational values") {
    // s = 40 keeps the unit test quick; the acceptance suite runs s = 100.
    const Rational t(1, 3);
    const double td = 1.0 / 3.0;
    {
        const auto est = g_asymptotic(80, 40, td);
        const double log_exact = log_abs(g_series_at(80, 40, t));
        CHECK(std::fabs(log_exact - est.log_correction) < 0.1);
    }
    {
        const auto est = g_asymptotic(20, 40, td);
        const double log_exact = log_abs(g_series_at(20, 40, t) - Rational(1));
        CHECK(std::fabs(log_exact - est.log_correction) < 0.1);
    }
}

TEST_CASE("erfc evaluator") {
    CHECK(erfc_eval(0.0) == 1.0);
    CHECK(erfc_eval(1.0) == doctest::Approx(0.15729920705028513).epsilon(1e-12));
    for (double x : {-5.5, -3.0, -1.7, -0.4, 0.3, 1.9, 2.0, 2.1, 4.2, 6.0}) {
        CHECK(erfc_eval(x) == doctest::Approx(std::erfc(x)).epsilon(1e-12));
    }
    for (int i = 0; i <= 20; ++i) {
        const double x = -2.0 + 0.2 * i;
        CHECK(std::fabs(erfc_eval(-x) - (2.0 - erfc_eval(x))) < 1e-14);
    }
}

TEST_CASE("erfc scaling window") {
    CHECK(erfc_scaling(0.0, 0.37) == 0.5);
    CHECK(erfc_scaling(9.0, 0.5) < 1e-9);
    CHECK(erfc_scaling(-9.0, 0.5) > 1.0 - 1e-9);
    // finite-s values approach the limit: error shrinks from s=49 to s=196
    const Rational t(1, 2);
    double worst49 = 0.0, worst196 = 0.0;
    for (int v = -2; v <= 2; ++v) {
        worst49 = std::max(worst49,
                           std::fabs(g_series_at(49 + v * 7, 49, t).to_double() -
                                     erfc_scaling(v, 0.5)));
        worst196 = std::max(worst196,
                            std::fabs(g_series_at(196 + v * 14, 196, t).to_double() -
                                      erfc_scaling(v, 0.5)));
    }
    CHECK(worst196 < worst49);
    CHECK(worst196 < 0.05);
}

TEST_CASE("sigma expansion terms") {
    // trivial branch
    CHECK(sigma1(0.5, 0.3) == 0.0);
    CHECK(sigma0(0.5, 0.3) == 0.0);
    // small-t law sigma1 = (mu-1)/t - 2 + O(t)
    CHECK(std::fabs(sigma1(3.0, 1e-4) - ((3.0 - 1.0) / 1e-4 - 2.0)) < 1e-3);
    // regular across t = 1/2, where the 1-2t root denominator degenerates:
    // the cubic there gives sigma1 = 2 (mu-1)^2 / (1+mu)
    CHECK(sigma1(2.0, 0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(std::fabs(sigma1(2.0, 0.5 + 1e-9) - sigma1(2.0, 0.5 - 1e-9)) < 1e-7);

    SeededRng rng(63);
    for (int i = 0; i < 50; ++i) {
        const double mu = uniform_in(rng, 1.05, 3.0);
        const double t = uniform_in(rng, 0.05, 0.95);
        CHECK(std::fabs(sigma_cubic_residual(mu, t, sigma1(mu, t))) < 1e-10);
    }
    // sigma1' by analytic differentiation matches central differences
    for (int i = 0; i < 10; ++i) {
        const double mu = uniform_in(rng, 1.1, 3.0);
        const double t = uniform_in(rng, 0.1, 0.9);
        const double h = 1e-6;
        const double numeric = (sigma1(mu, t + h) - sigma1(mu, t - h)) / (2.0 * h);
        CHECK(sigma1_prime(mu, t) == doctest::Approx(numeric).epsilon(1e-6));
    }
    CHECK_THROWS_AS(sigma1(1.0, 0.3), std::domain_error);
}

TEST_CASE("sigma terms integrate the rate functions") {
    SeededRng rng(64);
    const double h = 1e-5;
    for (int i = 0; i < 20; ++i) {
        const double mu = uniform_in(rng, 1.1, 3.0);
        const double t = uniform_in(rng, 0.1, 0.9);
        const double dphi1 = (phi1(mu, t + h) - phi1(mu, t - h)) / (2.0 * h);
        const double dphi0 = (phi0(mu, t + h) - phi0(mu, t - h)) / (2.0 * h);
        CHECK(std::fabs(sigma1(mu, t) + dphi1) < 1e-6);
        CHECK(std::fabs(sigma0(mu, t) + dphi0) < 1e-5);
    }
}

TEST_CASE("sigma cubic recovered from the shared ODE table") {
    SeededRng rng(65);
    for (int i = 0; i < 10; ++i) {
        const Rational mu = Rational(1) + rng.unit_rational();
        const Rational t = rng.unit_rational();
        const auto derived = sigma_cubic_from_ode(mu, t);
        CHECK(derived[0] == t * t * (Rational(1) - Rational(2) * t));
        CHECK(derived[1] == Rational(2) * t * t * (Rational(1) + mu));
        CHECK(derived[2] == -(mu - Rational(1)) * (mu - Rational(1)));
    }
}

TEST_CASE("scaling point coordinates") {
    const auto p = ScalingPoint::at(120, 100, 0.5);
    CHECK(p.mu == doctest::Approx(1.2));
    CHECK(p.lam == doctest::Approx(1.0));
    CHECK(p.v == doctest::Approx(2.0));
}

TEST_CASE("small-t leading data") {
    {
        const auto lead = small_t_leading(3, 1);
        CHECK(lead.exponent == 2);
        CHECK(lead.coeff0 == Rational(1));
        CHECK(lead.coeff1 == Rational(-1));
        CHECK_FALSE(lead.complement);
    }
    {
        // 1 - g(1,2) = t^2
        const auto lead = small_t_leading(1, 2);
        CHECK(lead.exponent == 2);
        CHECK(lead.coeff0 == Rational(1));
        CHECK(lead.coeff1 == Rational(0));
        CHECK(lead.complement);
    }
    CHECK_NOTHROW(small_t_leading(5, 3));
    CHECK_NOTHROW(small_t_leading(2, 5));
    CHECK_THROWS_AS(small_t_leading(4, 4), std::domain_error);
}
