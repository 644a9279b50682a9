#pragma once

#include "pdwbc/poly.hpp"
#include "pdwbc/rational.hpp"

#include <array>
#include <utility>

namespace pdwbc {

// Coordinates of the scaling regimes: mu = m/s, lam = t/(1-t), and the
// window variable v = (m-s)/sqrt(s).
struct ScalingPoint {
    double mu = 0.0;
    double lam = 0.0;
    double v = 0.0;
    static ScalingPoint at(long m, long s, double t);
};

// Leading step value, the log of the exponentially small correction
// (-s Phi1 - Phi0 - log(s)/2), and the sign it enters with.
struct AsymptoticEstimate {
    double leading = 0.0;
    double log_correction = 0.0;
    int sign = 0;
};

// Roots z_minus < 0 < z_plus of the saddle-point equation
// mu (1 + lam z) z = lam + z.
std::pair<double, double> saddle_points(double mu, double lam);

// Phase F(z) = mu log(lam+z) + log(1+lam z) - log z - (mu+1) log(1+lam)
// and its first two derivatives (derivatives are rational in z, so they are
// also defined at the negative root).
double saddle_f(double mu, double lam, double z);
double saddle_fprime(double mu, double lam, double z);
double saddle_fsecond(double mu, double lam, double z);

// Rate functions of the step asymptotics; positive decay rate phi1 vanishes
// only as mu -> 1, where both are degenerate (use erfc_scaling there).
double phi1(double mu, double t);
double phi0(double mu, double t);

// Step + log-correction estimate; requires s >= 10 and |m/s - 1| >= 0.1.
AsymptoticEstimate g_asymptotic(long m, long s, double t);

// Complementary error function, relative error <= 1e-12: Taylor series for
// |x| <= 2, continued fraction beyond, reflection for x < 0.
double erfc_eval(double x);

// Scaling form near the step: (1/2) erfc(v / (2 sqrt(lam))).
double erfc_scaling(double v, double t);

/*
 * Leading terms of the large-s expansion of d/dt log g (mu > 1) resp.
 * d/dt log(1-g) (the trivial branch 0 is returned for mu < 1): sigma1 is the
 * proper root of the cubic t^2(1-2t) x^3 + 2t^2(1+mu) x^2 - (mu-1)^2 x = 0,
 * evaluated in a conjugate form that stays regular across t = 1/2; sigma0
 * follows from the next order, using the analytic derivative of sigma1.
 */
double sigma1(double mu, double t);
double sigma1_prime(double mu, double t);
double sigma0(double mu, double t);

// Residual of the sigma1 cubic at the given value x.
double sigma_cubic_residual(double mu, double t, double x);

// Cubic coefficients {x^3, x^2, x} recovered from the shared ODE coefficient
// table by exact interpolation in s (with m = mu s), normalized so they can
// be compared term by term with the closed cubic above.
std::array<Rational, 3> sigma_cubic_from_ode(const Rational& mu, const Rational& t);

/*
 * Small-t data of g: for s < m the expansion of g itself, for s > m
 * (complement = true) the expansion of 1 - g. The closed forms are checked
 * against exact coefficient extraction from g_series before returning.
 */
struct SmallTLeading {
    long exponent = 0;
    Rational coeff0;
    Rational coeff1;
    bool complement = false;
};
SmallTLeading small_t_leading(int m, int s);

} // namespace pdwbc
