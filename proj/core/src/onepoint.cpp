#include "pdwbc/onepoint.hpp"

#include "pdwbc/det.hpp"
#include "pdwbc/partition.hpp"
#include "pdwbc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdwbc {

namespace {

void require_ms(int m, int s) {
    if (m < 1 || s < 1) throw std::invalid_argument("requires m >= 1 and s >= 1");
}

void require_unit_open(const Rational& t) {
    if (t <= Rational(0) || t >= Rational(1)) throw std::domain_error("requires 0 < t < 1");
}

void require_rows(const std::vector<Rational>& t_rows) {
    if (t_rows.empty()) throw std::invalid_argument("needs at least one row parameter");
    for (const auto& t : t_rows) require_unit_open(t);
    for (size_t j = 0; j < t_rows.size(); ++j) {
        for (size_t k = j + 1; k < t_rows.size(); ++k) {
            if (t_rows[j] == t_rows[k]) {
                throw degenerate_input_error(
                    "coincident row parameters: use the homogeneous representations");
            }
        }
    }
}

// tau(t_i, w) = (1 - 2 t_i + t_i w)/(w - t_i) evaluated at w.
Rational tau_at(const Rational& ti, const Rational& w) {
    return (Rational(1) - Rational(2) * ti + ti * w) / (w - ti);
}

} // namespace

Poly g_series(int m, int s) {
    require_ms(m, s);
    const Poly one_minus_t = Poly::from_coeffs({Rational(1), Rational(-1)});
    const Poly omt_sq = one_minus_t * one_minus_t;

    Poly result;
    Poly omt_pow = one_minus_t; // (1-t)^(2j+1)
    const int terms = std::min(m, s);
    for (int j = 0; j < terms; ++j) {
        // j-th Hasse derivative of the geometric polynomial 1 + ... + t^(s-1)
        std::vector<Rational> d(static_cast<size_t>(s - j));
        for (int k = j; k < s; ++k) d[k - j] = Rational(binomial(k, j));
        Poly term = Rational(binomial(m - 1, j)) * Poly::from_coeffs(std::move(d));
        term = (term * omt_pow).mul_tpow(static_cast<unsigned>(m - 1 - j));
        result += term;
        if (j + 1 < terms) omt_pow = omt_pow * omt_sq;
    }
    return result;
}

Rational g_series_at(int m, int s, const Rational& t) {
    require_ms(m, s);
    // Powers of t up to the largest exponent used below.
    const int max_pow = std::max(m - 1, s - 1);
    std::vector<Rational> tp(static_cast<size_t>(max_pow) + 1);
    tp[0] = Rational(1);
    for (int i = 1; i <= max_pow; ++i) tp[i] = tp[i - 1] * t;

    const Rational omt = Rational(1) - t;
    const Rational omt_sq = omt * omt;
    Rational omt_pow = omt;
    Rational sum(0);
    const int terms = std::min(m, s);
    for (int j = 0; j < terms; ++j) {
        Rational dj(0);
        for (int k = j; k < s; ++k) dj += Rational(binomial(k, j)) * tp[k - j];
        sum += Rational(binomial(m - 1, j)) * omt_pow * tp[m - 1 - j] * dj;
        if (j + 1 < terms) omt_pow *= omt_sq;
    }
    return sum;
}

Rational g_residue_homogeneous(int m, int s, const Rational& t) {
    require_ms(m, s);
    require_unit_open(t);
    const unsigned order = static_cast<unsigned>(s - 1);
    const Rational omt = Rational(1) - t;
    // Around w = t + x: w^(m-1) (1-2t+tw)^s / (1-w), pole (w-t)^s factored out.
    const TruncSeries w_pow = TruncSeries::affine(t, order, t, Rational(1)).pow(m - 1);
    const TruncSeries tau_num = TruncSeries::affine(t, order, omt * omt, t).pow(s);
    const TruncSeries one_minus_w = TruncSeries::affine(t, order, omt, Rational(-1));
    return ((w_pow * tau_num) / one_minus_w).coeff(order);
}

Rational g_semiinf_inhomogeneous(const std::vector<Rational>& t_rows, int m) {
    require_rows(t_rows);
    if (m < 1) throw std::invalid_argument("requires m >= 1");
    const size_t s = t_rows.size();
    Rational sum(0);
    for (size_t j = 0; j < s; ++j) {
        const Rational& tj = t_rows[j];
        Rational res = tj.pow(m - 1) * (Rational(1) - tj);
        for (size_t k = 0; k < s; ++k) {
            if (k == j) continue;
            res *= tau_at(t_rows[k], tj);
        }
        sum += res;
    }
    return sum;
}

namespace {

// Residue of the finite-N integrand at its simple pole w = t_j.
Rational finite_n_residue_at(const std::vector<Rational>& t_rows, int n, int m, size_t j) {
    const int s = static_cast<int>(t_rows.size());
    const Rational& tj = t_rows[j];
    Rational res = tj.pow(m - 1) / (Rational(1) - tj);
    res *= (Rational(1) - tj) * (Rational(1) - tj); // residue of tau(t_j, .)
    for (int k = 0; k < s; ++k) {
        if (static_cast<size_t>(k) == j) continue;
        res *= tau_at(t_rows[k], tj);
    }

    std::vector<std::vector<Rational>> det_rows(s, std::vector<Rational>(s));
    for (int i = 0; i < s; ++i) {
        const Rational& ti = t_rows[i];
        const Rational omt_i = Rational(1) - ti;
        Rational inv_tau(0);
        if (static_cast<size_t>(i) != j) {
            const Rational denom = Rational(1) - Rational(2) * ti + ti * tj;
            if (denom.is_zero()) {
                throw std::domain_error("contour pinch: tau(t_i, w) vanishes at w = t_j");
            }
            inv_tau = (tj - ti) / denom;
        }
        const Rational tin = ti.pow(n);
        for (int l = 1; l <= s; ++l) {
            det_rows[i][l - 1] = omt_i.pow(s - l) * (ti.pow(l - 1) - tin * inv_tau);
        }
    }
    return res * det_exact(std::move(det_rows));
}

Rational vandermonde_inverse_prefactor(const std::vector<Rational>& t_rows) {
    Rational p(1);
    for (size_t j = 0; j < t_rows.size(); ++j) {
        for (size_t k = j + 1; k < t_rows.size(); ++k) p /= t_rows[k] - t_rows[j];
    }
    return p;
}

} // namespace

Rational g_finite_n(const std::vector<Rational>& t_rows, int n, int m) {
    require_rows(t_rows);
    const int s = static_cast<int>(t_rows.size());
    if (n < s) throw std::invalid_argument("requires N >= s");
    if (m < 1 || m > n) throw std::invalid_argument("requires 1 <= m <= N");

    Rational sum(0);
    for (size_t j = 0; j < t_rows.size(); ++j) sum += finite_n_residue_at(t_rows, n, m, j);
    return vandermonde_inverse_prefactor(t_rows) * sum / z_partial_homogeneous(t_rows, n);
}

Rational finite_n_residue_at_one(const std::vector<Rational>& t_rows, int n) {
    require_rows(t_rows);
    const int s = static_cast<int>(t_rows.size());
    if (n < s) throw std::invalid_argument("requires N >= s");
    std::vector<std::vector<Rational>> det_rows(s, std::vector<Rational>(s));
    for (int i = 0; i < s; ++i) {
        const Rational omt_i = Rational(1) - t_rows[i];
        const Rational tin = t_rows[i].pow(n);
        for (int l = 1; l <= s; ++l) {
            det_rows[i][l - 1] = omt_i.pow(s - l) * (t_rows[i].pow(l - 1) - tin);
        }
    }
    return vandermonde_inverse_prefactor(t_rows) * det_exact(std::move(det_rows));
}

Rational jacobi_eval(int n, int alpha, int beta, const Rational& t) {
    if (n < 0) throw std::invalid_argument("requires n >= 0");
    if (n + alpha < 0) throw std::invalid_argument("requires n + alpha >= 0");
    if (t.is_zero() && alpha > 0) throw std::domain_error("pole at t = 0 for alpha > 0");
    if (t == Rational(1) && (beta > 0 || n + beta < 0)) {
        throw std::domain_error("pole at t = 1");
    }

    const unsigned order = static_cast<unsigned>(n);
    const TruncSeries z_pow = TruncSeries::affine(t, order, t, Rational(1))
                                  .pow(static_cast<unsigned long>(n + alpha));
    const TruncSeries one_minus_z = TruncSeries::affine(t, order, Rational(1) - t, Rational(-1));
    const TruncSeries factor =
        n + beta >= 0 ? one_minus_z.pow(static_cast<unsigned long>(n + beta))
                      : one_minus_z.pow(static_cast<unsigned long>(-(n + beta))).inverse();
    const Rational coefficient = (z_pow * factor).coeff(order);
    return t.pow(-alpha) * (Rational(1) - t).pow(-beta) * coefficient;
}

Rational g_jacobi(int m, int s, const Rational& t) {
    require_ms(m, s);
    require_unit_open(t);
    Rational sum(0);
    Rational neg_t_pow(1);
    for (int j = 0; j <= s; ++j) {
        sum += Rational(binomial(s, j)) * neg_t_pow * jacobi_eval(s - 1, m - s, j - s, t);
        neg_t_pow *= -t;
    }
    return t.pow(m - s) * sum;
}

Rational z_exit_coordinate(const ExitPattern& pattern, const std::vector<Rational>& t_rows) {
    require_rows(t_rows);
    const int s = static_cast<int>(t_rows.size());
    if (pattern.size() != s) throw std::invalid_argument("pattern size must equal s");
    if (s > 8) throw resource_error("permutation sum guard: s <= 8");

    Rational prefactor = vandermonde_inverse_prefactor(t_rows);
    for (const auto& t : t_rows) prefactor *= Rational(1) - t;

    std::vector<int> perm(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) perm[i] = i;
    Rational sum(0);
    do {
        int inversions = 0;
        for (int j = 0; j < s; ++j) {
            for (int k = j + 1; k < s; ++k) {
                if (perm[j] > perm[k]) ++inversions;
            }
        }
        Rational term(inversions % 2 == 0 ? 1 : -1);
        for (int j = 0; j < s; ++j) {
            term *= t_rows[perm[j]].pow(pattern.columns[j] - 1);
        }
        for (int j = 0; j < s; ++j) {
            for (int k = j + 1; k < s; ++k) {
                term *= Rational(1) - Rational(2) * t_rows[perm[j]] +
                        t_rows[perm[j]] * t_rows[perm[k]];
            }
        }
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return prefactor * sum;
}

namespace {

/*
 * Dense multivariate polynomial in x_1..x_s truncated at degree s-1 in each
 * variable. Exponents only grow under multiplication, so anything truncated
 * away can never reach the target coefficient (s-1, ..., s-1).
 */
class ExitTruncPoly {
public:
    ExitTruncPoly(int vars, int cap) : vars_(vars), cap_(cap), c_(ipow(cap, vars)) {
        c_[0] = Rational(1);
        stride_.resize(static_cast<size_t>(vars));
        size_t st = 1;
        for (int v = 0; v < vars; ++v) {
            stride_[v] = st;
            st *= static_cast<size_t>(cap);
        }
    }

    // Multiply by sum_d f[d] x_var^d.
    void mul_univariate(int var, const std::vector<Rational>& f) {
        std::vector<Rational> out(c_.size(), Rational(0));
        for (size_t idx = 0; idx < c_.size(); ++idx) {
            if (c_[idx].is_zero()) continue;
            const int ev = static_cast<int>((idx / stride_[var]) % static_cast<size_t>(cap_));
            for (size_t d = 0; d < f.size() && ev + static_cast<int>(d) < cap_; ++d) {
                if (f[d].is_zero()) continue;
                out[idx + d * stride_[var]] += c_[idx] * f[d];
            }
        }
        c_ = std::move(out);
    }

    // Multiply by sum of terms coef * x_a^da * x_b^db.
    void mul_pair(int a, int b, const std::vector<std::tuple<int, int, Rational>>& terms) {
        std::vector<Rational> out(c_.size(), Rational(0));
        for (size_t idx = 0; idx < c_.size(); ++idx) {
            if (c_[idx].is_zero()) continue;
            const int ea = static_cast<int>((idx / stride_[a]) % static_cast<size_t>(cap_));
            const int eb = static_cast<int>((idx / stride_[b]) % static_cast<size_t>(cap_));
            for (const auto& [da, db, coef] : terms) {
                if (ea + da >= cap_ || eb + db >= cap_) continue;
                out[idx + static_cast<size_t>(da) * stride_[a] +
                    static_cast<size_t>(db) * stride_[b]] += c_[idx] * coef;
            }
        }
        c_ = std::move(out);
    }

    const Rational& top_coefficient() const { return c_.back(); }

private:
    static size_t ipow(int base, int e) {
        size_t r = 1;
        for (int i = 0; i < e; ++i) r *= static_cast<size_t>(base);
        return r;
    }

    int vars_;
    int cap_;
    std::vector<size_t> stride_;
    std::vector<Rational> c_;
};

} // namespace

Rational z_exit_residue_raw(const ExitPattern& pattern, const Rational& t) {
    require_unit_open(t);
    const int s = pattern.size();
    if (s > 5) throw resource_error("nested-series cost guard: s <= 5");

    ExitTruncPoly poly(s, s);
    for (int j = 0; j < s; ++j) {
        // (t + x_j)^(r_j - 1), truncated
        const int r = pattern.columns[j];
        std::vector<Rational> f(static_cast<size_t>(std::min(s, r)));
        for (size_t d = 0; d < f.size(); ++d) {
            f[d] = Rational(binomial(r - 1, d)) * t.pow(static_cast<long>(r - 1 - d));
        }
        poly.mul_univariate(j, f);
    }
    const Rational omt_sq = (Rational(1) - t) * (Rational(1) - t);
    for (int j = 0; j < s; ++j) {
        for (int k = j + 1; k < s; ++k) {
            // (x_j - x_k)((1-t)^2 + (t-2) x_j + t x_k + x_j x_k)
            poly.mul_pair(j, k,
                          {{1, 0, omt_sq},
                           {0, 1, -omt_sq},
                           {2, 0, t - Rational(2)},
                           {0, 2, -t},
                           {1, 1, Rational(2)},
                           {2, 1, Rational(1)},
                           {1, 2, Rational(-1)}});
        }
    }
    return poly.top_coefficient();
}

Rational z_exit_homogeneous(const ExitPattern& pattern, const Rational& t) {
    return (Rational(1) - t).pow(pattern.size()) * z_exit_residue_raw(pattern, t);
}

Rational g_from_exit_sum(int m, int s, const Rational& t, int max_column) {
    require_ms(m, s);
    require_unit_open(t);
    if (m > max_column) throw std::invalid_argument("requires m <= max_column");
    if (s > 4) throw resource_error("combinatorial guard: s <= 4");

    // All strictly increasing s-tuples within {1..max_column} containing m.
    std::vector<int> others;
    for (int c = 1; c <= max_column; ++c) {
        if (c != m) others.push_back(c);
    }
    const int pick = s - 1;
    std::vector<int> idx(static_cast<size_t>(pick));
    for (int i = 0; i < pick; ++i) idx[i] = i;

    Rational sum(0);
    while (true) {
        std::vector<int> cols{m};
        for (int i = 0; i < pick; ++i) cols.push_back(others[idx[i]]);
        std::sort(cols.begin(), cols.end());
        sum += z_exit_homogeneous(ExitPattern(cols), t);

        if (pick == 0) break;
        int i = pick - 1;
        while (i >= 0 && idx[i] == static_cast<int>(others.size()) - pick + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
    return sum;
}

Rational hyp2f1_terminating(long a, long b, long c, const Rational& z) {
    if (a > 0) throw std::domain_error("termination requires a <= 0");
    Rational sum(1), term(1);
    for (long k = 0;; ++k) {
        if (a + k == 0) break;
        if (c + k == 0) {
            throw std::domain_error("2F1 pole: nonpositive c reached before termination");
        }
        term *= Rational(a + k) * Rational(b + k) * z;
        term /= Rational(c + k) * Rational(k + 1);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

Poly delta_s(int m, int s) {
    require_ms(m, s);
    const Poly omt = Poly::from_coeffs({Rational(1), Rational(-1)});
    const Poly omt_sq = omt * omt;
    Poly omt_pow = omt;
    Poly result;
    const int terms = std::min(m, s);
    for (int k = 0; k < terms; ++k) {
        const Rational coef = Rational(binomial(s - 1, k) * binomial(m - 1, k));
        result += (coef * omt_pow).mul_tpow(static_cast<unsigned>(m + s - 2 - 2 * k));
        if (k + 1 < terms) omt_pow = omt_pow * omt_sq;
    }
    return result;
}

Poly delta_m(int m, int s) {
    if (s < 1) throw std::invalid_argument("requires s >= 1");
    if (m < 2) {
        throw std::domain_error("delta_m needs m >= 2: g(m-1,s) is undefined at m = 1");
    }
    const Poly omt = Poly::from_coeffs({Rational(1), Rational(-1)});
    const Poly omt_sq = omt * omt;
    Poly omt_pow = omt_sq;
    Poly result;
    const int terms = std::min(s, m - 1); // k <= min(s-1, m-2)
    Rational coef(static_cast<long>(-s));
    for (int k = 0; k < terms; ++k) {
        result += (coef * omt_pow).mul_tpow(static_cast<unsigned>(m + s - 3 - 2 * k));
        if (k + 1 < terms) {
            omt_pow = omt_pow * omt_sq;
            // (-s+1)_k (-m+2)_k / ((2)_k k!) advanced one step
            coef *= Rational(-s + 1 + k) * Rational(-m + 2 + k);
            coef /= Rational(2 + k) * Rational(1 + k);
        }
    }
    return result;
}

std::array<Poly, 3> ode_coefficients(const Rational& m, const Rational& s) {
    auto poly = [](std::initializer_list<Rational> cs) {
        return Poly::from_coeffs(std::vector<Rational>(cs));
    };
    const Rational two(2);
    const Poly one = poly({Rational(1)});
    const Poly t_sq = Poly::monomial(Rational(1), 2);
    const Poly omt = poly({Rational(1), Rational(-1)});
    const Poly om2t = poly({Rational(1), Rational(-2)});
    const Poly omt_sq = omt * omt;
    const Rational sm = s - m;
    const Rational s2m2 = s * s - m * m;

    const Poly a = (one + (two * sm) * omt) * omt * om2t * t_sq;

    Poly b_inner = poly({Rational(1), Rational(-6), Rational(6)});
    b_inner -= (two * m) * (omt_sq * poly({Rational(1), Rational(-5)}));
    b_inner += (two * s) * (omt * poly({Rational(1), Rational(-5), Rational(5)}));
    b_inner += (two * s2m2) * (omt_sq * Poly::monomial(Rational(1), 1));
    const Poly b = Rational(2) * (b_inner * Poly::monomial(Rational(1), 1));

    Poly c_inner = Rational(6) * (om2t * Poly::monomial(Rational(1), 1));
    c_inner -= m * poly({Rational(1), Rational(13), Rational(-34), Rational(16)});
    c_inner += s * poly({Rational(1), Rational(7), Rational(-22), Rational(16)});
    c_inner += poly({Rational(3) * sm * sm, Rational(-4) * (two * s * s - s * m - m * m),
                     Rational(8) * s2m2}) *
               omt;
    c_inner += (two * sm * sm * sm) * omt_sq;
    const Poly c = -c_inner;

    return {a, b, c};
}

Poly ode_residual(int m, int s) {
    require_ms(m, s);
    const auto [a, b, c] = ode_coefficients(Rational(static_cast<long>(m)),
                                            Rational(static_cast<long>(s)));
    const Poly y = g_series(m, s).derivative();
    const Poly y1 = y.derivative();
    const Poly y2 = y1.derivative();
    return a * y2 + b * y1 + c * y;
}

} // namespace pdwbc
