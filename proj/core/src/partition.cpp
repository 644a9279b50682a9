#include "pdwbc/partition.hpp"

#include "pdwbc/det.hpp"
#include "pdwbc/lattice.hpp"

#include <stdexcept>

namespace pdwbc {

namespace {

void require_distinct(const std::vector<Rational>& xs, const char* what) {
    for (size_t j = 0; j < xs.size(); ++j) {
        for (size_t k = j + 1; k < xs.size(); ++k) {
            if (xs[j] == xs[k]) {
                throw degenerate_input_error(std::string("coincident ") + what +
                                             ": use the homogeneous-limit formulas");
            }
        }
    }
}

Rational phi(const Rational& lambda, const Rational& nu) {
    const Rational d = lambda - nu;
    if (d.is_zero() || d == Rational(-1)) {
        throw std::domain_error("phi(lambda,nu) pole: lambda - nu in {0,-1}");
    }
    return ((d + Rational(1)) * d).inv();
}

void require_unit_interval(const std::vector<Rational>& t_rows) {
    for (const auto& t : t_rows) {
        if (t <= Rational(0) || t >= Rational(1)) {
            throw std::domain_error("row parameters must lie in (0,1)");
        }
    }
}

} // namespace

Rational z_foda_wheeler(const std::vector<Rational>& lambdas, const std::vector<Rational>& nus) {
    const int s = static_cast<int>(lambdas.size());
    const int n = static_cast<int>(nus.size());
    if (s < 1 || n < s) throw std::invalid_argument("requires 1 <= s <= N");
    require_distinct(lambdas, "lambda parameters");
    require_distinct(nus, "nu parameters");

    Rational prefactor(1);
    for (const auto& l : lambdas) {
        for (const auto& v : nus) {
            const Rational d = l - v;
            if (d.is_zero() || d == Rational(-1)) {
                throw std::domain_error("lambda_j - nu_k in {0,-1}");
            }
            prefactor *= d;
        }
    }
    for (int j = 0; j < s; ++j) {
        for (int k = j + 1; k < s; ++k) prefactor /= lambdas[k] - lambdas[j];
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) prefactor /= nus[j] - nus[k];
    }

    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[i][j] = i < s ? phi(lambdas[i], nus[j])
                            : nus[j].pow(n - (i + 1)); // nu_j^(N-i), 1-based i
        }
    }
    return prefactor * det_exact(std::move(m));
}

Rational z_kostov(const std::vector<Rational>& lambdas, const std::vector<Rational>& nus) {
    const int s = static_cast<int>(lambdas.size());
    if (s < 1 || static_cast<int>(nus.size()) < s) throw std::invalid_argument("requires 1 <= s <= N");
    require_distinct(lambdas, "lambda parameters");

    Rational prefactor(1);
    for (int j = 0; j < s; ++j) {
        for (int k = j + 1; k < s; ++k) prefactor /= lambdas[k] - lambdas[j];
    }

    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
    for (int i = 0; i < s; ++i) {
        Rational b_prod(1);
        for (const auto& v : nus) b_prod *= b_weight(lambdas[i], v);
        for (int j = 0; j < s; ++j) {
            m[i][j] = lambdas[i].pow(j) - (lambdas[i] + Rational(1)).pow(j) * b_prod;
        }
    }
    return prefactor * det_exact(std::move(m));
}

Rational varphi_derivative(unsigned n, const Rational& t) {
    if (t <= Rational(0) || t >= Rational(1)) {
        throw std::domain_error("varphi_derivative needs 0 < t < 1 (pole at lambda = 0)");
    }
    const Rational ratio = (Rational(1) - t) / t;
    Rational r = Rational(factorial(n)) * ratio.pow(static_cast<long>(n) + 1) *
                 (Rational(1) - t.pow(static_cast<long>(n) + 1));
    return (n % 2 == 0) ? r : -r;
}

Rational z_partial_homogeneous(const std::vector<Rational>& t_rows, int n) {
    const int s = static_cast<int>(t_rows.size());
    if (s < 1 || n < s) throw std::invalid_argument("requires 1 <= s <= N");
    require_unit_interval(t_rows);
    require_distinct(t_rows, "row parameters");

    Rational prefactor(1);
    for (int j = 0; j < s; ++j) {
        for (int k = j + 1; k < s; ++k) prefactor /= t_rows[k] - t_rows[j];
    }
    if ((s * (s - 1) / 2) % 2 != 0) prefactor = -prefactor;

    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
    for (int i = 0; i < s; ++i) {
        const Rational one_minus = Rational(1) - t_rows[i];
        const Rational t_n = t_rows[i].pow(n);
        for (int j = 0; j < s; ++j) {
            m[i][j] = one_minus.pow(j) * (t_rows[i].pow(s - 1 - j) - t_n);
        }
    }
    return prefactor * det_exact(std::move(m));
}

Rational z_homogeneous(const Rational& t, int s, int n) {
    if (s < 1 || n < s) throw std::invalid_argument("requires 1 <= s <= N");
    if (t < Rational(0) || t >= Rational(1)) throw std::domain_error("requires 0 <= t < 1");

    Rational prefactor(1);
    for (int k = 1; k <= s; ++k) prefactor /= Rational(factorial(n - k));
    for (int k = 1; k <= s - 1; ++k) prefactor /= Rational(factorial(k));

    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= s; ++j) {
            const int idx = n - s + i + j;
            m[i - 1][j - 1] = Rational(factorial(idx - 2)) * (Rational(1) - t.pow(idx - 1));
        }
    }
    return prefactor * det_exact(std::move(m));
}

Integer hankel_factorial_det(unsigned alpha, int s) {
    if (s < 1) throw std::invalid_argument("requires s >= 1");
    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= s; ++j) {
            m[i - 1][j - 1] = Rational(factorial(alpha + i + j - 2));
        }
    }
    const Rational det = det_exact(std::move(m));

    Integer product(1);
    for (int j = 0; j < s; ++j) product *= factorial(alpha + j) * factorial(j);

    if (det != Rational(product)) {
        throw std::logic_error("Hankel factorial determinant disagrees with its product form");
    }
    return product;
}

namespace detail {

Rational z_partial_homogeneous_phi_form(const std::vector<Rational>& t_rows, int n) {
    const int s = static_cast<int>(t_rows.size());
    if (s < 1 || n < s) throw std::invalid_argument("requires 1 <= s <= N");
    require_unit_interval(t_rows);
    require_distinct(t_rows, "row parameters");

    std::vector<Rational> lambdas;
    lambdas.reserve(t_rows.size());
    for (const auto& t : t_rows) lambdas.push_back(t / (Rational(1) - t));

    Rational prefactor(1);
    if ((s * (n - s)) % 2 != 0) prefactor = -prefactor;
    for (int k = 1; k <= s; ++k) prefactor /= Rational(factorial(n - k));
    for (const auto& l : lambdas) prefactor *= l.pow(n);
    for (int j = 0; j < s; ++j) {
        for (int k = j + 1; k < s; ++k) prefactor /= lambdas[k] - lambdas[j];
    }

    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s));
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= s; ++j) {
            m[i - 1][j - 1] = varphi_derivative(n - s + i - 1, t_rows[j - 1]);
        }
    }
    return prefactor * det_exact(std::move(m));
}

} // namespace detail

} // namespace pdwbc
