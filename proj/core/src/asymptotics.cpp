#include "pdwbc/asymptotics.hpp"

#include "pdwbc/onepoint.hpp"

#include <cmath>
#include <stdexcept>

namespace pdwbc {

namespace {

void require_unit_open(double t) {
    if (!(t > 0.0 && t < 1.0)) throw std::domain_error("requires 0 < t < 1");
}

double lambda_of(double t) { return t / (1.0 - t); }

} // namespace

ScalingPoint ScalingPoint::at(long m, long s, double t) {
    if (m < 0 || s < 1) throw std::invalid_argument("requires m >= 0, s >= 1");
    require_unit_open(t);
    ScalingPoint p;
    p.mu = static_cast<double>(m) / static_cast<double>(s);
    p.lam = lambda_of(t);
    p.v = static_cast<double>(m - s) / std::sqrt(static_cast<double>(s));
    return p;
}

std::pair<double, double> saddle_points(double mu, double lam) {
    if (!(lam > 0.0)) throw std::domain_error("requires lam > 0");
    if (!(mu > 0.0)) throw std::domain_error("degenerate saddle equation at mu = 0");
    const double disc = std::sqrt((1.0 - mu) * (1.0 - mu) + 4.0 * mu * lam * lam);
    const double z_plus = (1.0 - mu + disc) / (2.0 * mu * lam);
    const double z_minus = (1.0 - mu - disc) / (2.0 * mu * lam);
    return {z_minus, z_plus};
}

double saddle_f(double mu, double lam, double z) {
    return mu * std::log(lam + z) + std::log(1.0 + lam * z) - std::log(z) -
           (mu + 1.0) * std::log(1.0 + lam);
}

double saddle_fprime(double mu, double lam, double z) {
    return mu / (lam + z) + lam / (1.0 + lam * z) - 1.0 / z;
}

double saddle_fsecond(double mu, double lam, double z) {
    return -mu / ((lam + z) * (lam + z)) - lam * lam / ((1.0 + lam * z) * (1.0 + lam * z)) +
           1.0 / (z * z);
}

double phi1(double mu, double t) {
    require_unit_open(t);
    if (!(mu > 0.0)) throw std::domain_error("requires mu > 0");
    if (mu == 1.0) throw std::domain_error("degenerate window at mu = 1: use erfc_scaling");
    const double lam = lambda_of(t);
    const double disc = std::sqrt((mu - 1.0) * (mu - 1.0) + 4.0 * mu * lam * lam);
    return -mu * std::log(mu) -
           (1.0 + mu) * std::log((1.0 + mu + disc) / (2.0 * mu * (1.0 + lam))) +
           (1.0 - mu) * std::log((1.0 - mu + disc) / (2.0 * mu * lam));
}

double phi0(double mu, double t) {
    require_unit_open(t);
    if (!(mu > 0.0)) throw std::domain_error("requires mu > 0");
    if (mu == 1.0) throw std::domain_error("degenerate window at mu = 1: use erfc_scaling");
    const double lam = lambda_of(t);
    const double disc = std::sqrt((1.0 - mu) * (1.0 - mu) + 4.0 * mu * lam * lam);
    const double z_plus = (1.0 - mu + disc) / (2.0 * mu * lam);
    return std::log(std::fabs(1.0 - z_plus)) - std::log(1.0 + lam) +
           0.5 * std::log(2.0 * M_PI * mu * disc);
}

AsymptoticEstimate g_asymptotic(long m, long s, double t) {
    require_unit_open(t);
    if (s < 10) throw std::domain_error("asymptotic estimate needs s >= 10");
    const double mu = static_cast<double>(m) / static_cast<double>(s);
    if (std::fabs(mu - 1.0) < 0.1) {
        throw std::domain_error("mu too close to 1: use erfc_scaling");
    }
    AsymptoticEstimate est;
    est.leading = mu < 1.0 ? 1.0 : 0.0;
    est.sign = mu > 1.0 ? 1 : -1;
    est.log_correction = -static_cast<double>(s) * phi1(mu, t) - phi0(mu, t) -
                         0.5 * std::log(static_cast<double>(s));
    return est;
}

double erfc_eval(double x) {
    if (std::isnan(x)) throw std::domain_error("erfc of NaN");
    if (x < 0.0) return 2.0 - erfc_eval(-x);
    constexpr double inv_sqrt_pi = 0.564189583547756286948;
    if (x <= 2.0) {
        // erf(x) = 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1))
        double power = x; // (-1)^n x^(2n+1) / n!
        double sum = x;
        for (int n = 1; n < 200; ++n) {
            power *= -x * x / n;
            const double term = power / (2 * n + 1);
            sum += term;
            if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
        }
        return 1.0 - 2.0 * inv_sqrt_pi * sum;
    }
    // sqrt(pi) e^(x^2) erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
    // evaluated by the modified Lentz scheme.
    constexpr double tiny = 1e-300;
    double f = x, c = x, d = 0.0;
    for (int n = 1; n < 400; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) * inv_sqrt_pi / f;
}

double erfc_scaling(double v, double t) {
    require_unit_open(t);
    return 0.5 * erfc_eval(v / (2.0 * std::sqrt(lambda_of(t))));
}

namespace {

void check_sigma_domain(double mu, double t) {
    require_unit_open(t);
    if (!(mu > 0.0)) throw std::domain_error("requires mu > 0");
    if (mu == 1.0) throw std::domain_error("degenerate window at mu = 1: use erfc_scaling");
}

} // namespace

double sigma1(double mu, double t) {
    check_sigma_domain(mu, t);
    if (mu < 1.0) return 0.0; // trivial root branch
    // Conjugate form of (-t(1+mu) + sqrt(R))/(t(1-2t)); regular at t = 1/2.
    const double r = (mu - 1.0) * (mu - 1.0) * (1.0 - t) * (1.0 - t) + 4.0 * mu * t * t;
    return (mu - 1.0) * (mu - 1.0) / (t * (t * (1.0 + mu) + std::sqrt(r)));
}

double sigma1_prime(double mu, double t) {
    check_sigma_domain(mu, t);
    if (mu < 1.0) return 0.0;
    const double m1 = (mu - 1.0) * (mu - 1.0);
    const double r = m1 * (1.0 - t) * (1.0 - t) + 4.0 * mu * t * t;
    const double r_prime = -2.0 * m1 * (1.0 - t) + 8.0 * mu * t;
    const double u = t * (1.0 + mu) + std::sqrt(r);
    const double u_prime = (1.0 + mu) + r_prime / (2.0 * std::sqrt(r));
    return -m1 * (u + t * u_prime) / (t * u * t * u);
}

double sigma0(double mu, double t) {
    check_sigma_domain(mu, t);
    if (mu < 1.0) return 0.0;
    const double s1 = sigma1(mu, t);
    const double s1p = sigma1_prime(mu, t);
    const double denom = (1.0 - mu) * (1.0 - mu) - 4.0 * (mu + 1.0) * t * t * s1 -
                         3.0 * (1.0 - 2.0 * t) * t * t * s1 * s1;
    const double num =
        2.0 * (1.0 + mu) * t * t * s1p + 3.0 * (1.0 - 2.0 * t) * t * t * s1 * s1p -
        (3.0 * (1.0 - mu) - 4.0 * (mu + 2.0) * t + 8.0 * (mu + 1.0) * t * t) /
            (2.0 * (1.0 - t)) * s1 +
        2.0 * ((1.0 - mu) * (1.0 + 5.0 * t * t) - (5.0 - 6.0 * mu) * t) /
            ((1.0 - mu) * (1.0 - t)) * t * s1 * s1 +
        (1.0 - 2.0 * t) / (2.0 * (1.0 - mu) * (1.0 - t)) * t * t * s1 * s1 * s1;
    return num / denom;
}

double sigma_cubic_residual(double mu, double t, double x) {
    return t * t * (1.0 - 2.0 * t) * x * x * x + 2.0 * t * t * (1.0 + mu) * x * x -
           (mu - 1.0) * (mu - 1.0) * x;
}

namespace {

// Exact Lagrange interpolation through (nodes[i], values[i]).
Poly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
    Poly result;
    for (size_t i = 0; i < nodes.size(); ++i) {
        Poly basis(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly::from_coeffs({-nodes[j], Rational(1)});
            denom *= nodes[i] - nodes[j];
        }
        result += (values[i] / denom) * basis;
    }
    return result;
}

} // namespace

std::array<Rational, 3> sigma_cubic_from_ode(const Rational& mu, const Rational& t) {
    if (mu == Rational(1)) throw std::domain_error("degenerate window at mu = 1");
    // With m = mu s the table entries A, B, C are polynomials in s of degree
    // 1, 2, 3; the s^4 part of A sigma^3 s^3 + B sigma^2 s^2 + C sigma s is
    // the cubic, up to the common factor 2(1-mu)(1-t)^2.
    std::vector<Rational> nodes, av, bv, cv;
    for (long i = 1; i <= 4; ++i) {
        const Rational s(i);
        const auto [a, b, c] = ode_coefficients(mu * s, s);
        nodes.push_back(s);
        av.push_back(a.eval(t));
        bv.push_back(b.eval(t));
        cv.push_back(c.eval(t));
    }
    const Rational norm = Rational(2) * (Rational(1) - mu) * (Rational(1) - t).pow(2);
    return {interpolate(nodes, av).coeff(1) / norm, interpolate(nodes, bv).coeff(2) / norm,
            interpolate(nodes, cv).coeff(3) / norm};
}

SmallTLeading small_t_leading(int m, int s) {
    if (m < 1 || s < 1) throw std::invalid_argument("requires m >= 1 and s >= 1");
    if (m == s) throw std::domain_error("both expansions are inapplicable at m = s");

    SmallTLeading out;
    Poly expansion;
    if (s < m) {
        out.exponent = m - s;
        out.coeff0 = Rational(binomial(m - 1, s - 1));
        out.coeff1 = -out.coeff0 * (Rational(2L * s) - Rational(m) / Rational(m - s + 1L));
        out.complement = false;
        expansion = g_series(m, s);
    } else {
        out.exponent = s - m + 1;
        out.coeff0 = Rational(binomial(s, m - 1));
        out.coeff1 =
            -out.coeff0 * (Rational(2L * (m - 1)) - Rational(m - 1L) / Rational(s - m + 2L));
        out.complement = true;
        expansion = Poly(Rational(1)) - g_series(m, s);
    }

    for (long k = 0; k < out.exponent; ++k) {
        if (!expansion.coeff(static_cast<unsigned>(k)).is_zero()) {
            throw std::logic_error("small-t expansion starts below the predicted exponent");
        }
    }
    if (expansion.coeff(static_cast<unsigned>(out.exponent)) != out.coeff0 ||
        expansion.coeff(static_cast<unsigned>(out.exponent + 1)) != out.coeff1) {
        throw std::logic_error("small-t closed form disagrees with the exact expansion");
    }
    return out;
}

} // namespace pdwbc
