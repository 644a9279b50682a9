#include "pdwbc/qism.hpp"

#include <stdexcept>

namespace pdwbc {

Rational f_fun(const Rational& mu, const Rational& nu) {
    if (mu == nu) throw std::domain_error("f(mu,nu) pole at mu = nu");
    return Rational(1) + (mu - nu).inv();
}

Rational g_fun(const Rational& mu, const Rational& nu) {
    if (mu == nu) throw std::domain_error("g(mu,nu) pole at mu = nu");
    return (mu - nu).inv();
}

RMatrix build_L(const Rational& lambda, const Rational& nu) {
    const Rational b = b_weight(lambda, nu);
    const Rational c = c_weight(lambda, nu);
    RMatrix l(4);
    l.at(0, 0) = b + c;
    l.at(1, 1) = b;
    l.at(1, 2) = c;
    l.at(2, 1) = c;
    l.at(2, 2) = b;
    l.at(3, 3) = b + c;
    return l;
}

RMatrix build_R(const Rational& nu, const Rational& mu) {
    const Rational f = f_fun(mu, nu);
    const Rational g = g_fun(mu, nu);
    RMatrix r(4);
    r.at(0, 0) = f;
    r.at(1, 1) = Rational(1);
    r.at(1, 2) = g;
    r.at(2, 1) = g;
    r.at(2, 2) = Rational(1);
    r.at(3, 3) = f;
    return r;
}

namespace {

// Embeds a two-site operator (4x4, row index = state_a*2 + state_b) into the
// n-site space, acting on sites sa, sb; site 0 is the most significant bit.
RMatrix embed_pair(const RMatrix& op4, int n_sites, int sa, int sb) {
    const size_t dim = 1ull << n_sites;
    RMatrix out(dim);
    auto bit = [n_sites](size_t idx, int site) -> size_t {
        return (idx >> (n_sites - 1 - site)) & 1ull;
    };
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            bool others_match = true;
            for (int site = 0; site < n_sites; ++site) {
                if (site == sa || site == sb) continue;
                if (bit(i, site) != bit(j, site)) { others_match = false; break; }
            }
            if (!others_match) continue;
            const size_t ri = bit(i, sa) * 2 + bit(i, sb);
            const size_t rj = bit(j, sa) * 2 + bit(j, sb);
            out.at(i, j) = op4.at(ri, rj);
        }
    }
    return out;
}

} // namespace

bool verify_rll(const Rational& lambda, const Rational& nu, const Rational& mu) {
    // Sites: 0, 1 the two auxiliary spaces carrying nu, mu; site 2 quantum.
    const RMatrix r01 = embed_pair(build_R(nu, mu), 3, 0, 1);
    const RMatrix l_nu = embed_pair(build_L(lambda, nu), 3, 0, 2);
    const RMatrix l_mu = embed_pair(build_L(lambda, mu), 3, 1, 2);
    return r01 * (l_nu * l_mu) == (l_mu * l_nu) * r01;
}

Monodromy build_monodromy(const std::vector<std::pair<Rational, Rational>>& factors) {
    Monodromy t{RMatrix::identity(1), RMatrix(1), RMatrix(1), RMatrix::identity(1)};
    for (const auto& [b, c] : factors) {
        // 2x2 quantum-space blocks of L = b*Id + c*P in the auxiliary basis.
        RMatrix l00(2), l01(2), l10(2), l11(2);
        l00.at(0, 0) = b + c;
        l00.at(1, 1) = b;
        l01.at(1, 0) = c;
        l10.at(0, 1) = c;
        l11.at(0, 0) = b;
        l11.at(1, 1) = b + c;
        Monodromy next;
        next.a = kron(t.a, l00) + kron(t.b, l10);
        next.b = kron(t.a, l01) + kron(t.b, l11);
        next.c = kron(t.c, l00) + kron(t.d, l10);
        next.d = kron(t.c, l01) + kron(t.d, l11);
        t = std::move(next);
    }
    return t;
}

Monodromy monodromy_sweep_rows(const std::vector<Rational>& lambdas, const Rational& nu) {
    std::vector<std::pair<Rational, Rational>> factors;
    factors.reserve(lambdas.size());
    for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it) {
        factors.emplace_back(b_weight(*it, nu), c_weight(*it, nu));
    }
    return build_monodromy(factors);
}

bool verify_ab_algebra(const std::vector<Rational>& lambdas, const Rational& nu,
                       const Rational& mu) {
    if (lambdas.empty() || lambdas.size() > 4) {
        throw resource_error("monodromy guard: 1 <= n <= 4 factors (blocks up to 16x16)");
    }
    if (nu == mu) throw std::domain_error("A/B relations need nu != mu");
    const Monodromy tn = monodromy_sweep_rows(lambdas, nu);
    const Monodromy tm = monodromy_sweep_rows(lambdas, mu);
    const Rational f_nm = f_fun(nu, mu);
    const Rational g_mn = g_fun(mu, nu);

    const bool aa = tn.a * tm.a == tm.a * tn.a;
    const bool bb = tn.b * tm.b == tm.b * tn.b;
    const bool ab = tn.a * tm.b == f_nm * (tm.b * tn.a) + g_mn * (tn.b * tm.a);
    const bool ba = tn.b * tm.a == f_nm * (tm.a * tn.b) + g_mn * (tn.a * tm.b);
    return aa && bb && ab && ba;
}

bool verify_rtt(const std::vector<Rational>& lambdas, const Rational& nu, const Rational& mu,
                const RMatrix& k_left, const RMatrix& k_right) {
    if (k_left.dim() != 2 || k_right.dim() != 2) {
        throw std::invalid_argument("gl2 dressing matrices must be 2x2");
    }
    auto dressed = [&](const Monodromy& t) {
        std::array<std::array<const RMatrix*, 2>, 2> blk{{{&t.a, &t.b}, {&t.c, &t.d}}};
        const size_t dim = t.a.dim();
        std::array<std::array<RMatrix, 2>, 2> out;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                RMatrix acc(dim);
                for (int p = 0; p < 2; ++p) {
                    for (int q = 0; q < 2; ++q) {
                        const Rational w = k_left.at(i, p) * k_right.at(q, j);
                        if (!w.is_zero()) acc = acc + w * (*blk[p][q]);
                    }
                }
                out[i][j] = std::move(acc);
            }
        }
        return out;
    };

    const auto tn = dressed(monodromy_sweep_rows(lambdas, nu));
    const auto tm = dressed(monodromy_sweep_rows(lambdas, mu));
    const RMatrix r = build_R(nu, mu);

    // R(nu,mu) (T(nu) (x) T(mu)) == (T(mu) (x) T(nu)) R(nu,mu) on the
    // auxiliary pair: T(nu) keeps the first slot (indices a,b), T(mu) the
    // second (indices c,d); on the right the rapidities are swapped within
    // their slots and the mu-entries multiply from the left.
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            for (int b = 0; b < 2; ++b) {
                for (int d = 0; d < 2; ++d) {
                    RMatrix lhs(tn[0][0].dim()), rhs(tn[0][0].dim());
                    for (int ap = 0; ap < 2; ++ap) {
                        for (int cp = 0; cp < 2; ++cp) {
                            const Rational& w = r.at(a * 2 + c, ap * 2 + cp);
                            if (!w.is_zero()) lhs = lhs + w * (tn[ap][b] * tm[cp][d]);
                        }
                    }
                    for (int bp = 0; bp < 2; ++bp) {
                        for (int dp = 0; dp < 2; ++dp) {
                            const Rational& w = r.at(bp * 2 + dp, b * 2 + d);
                            if (!w.is_zero()) rhs = rhs + w * (tm[c][dp] * tn[a][bp]);
                        }
                    }
                    if (lhs != rhs) return false;
                }
            }
        }
    }
    return true;
}

bool verify_rtt(const std::vector<Rational>& lambdas, const Rational& nu, const Rational& mu) {
    return verify_rtt(lambdas, nu, mu, RMatrix::identity(2), RMatrix::identity(2));
}

Rational z_bracket(const LatticeSpec& spec) {
    const int n = spec.cols();
    if (n > 8) throw resource_error("bracket guard: 2^N <= 256");

    const size_t dim = 1ull << n;
    std::vector<Rational> v(dim, Rational(1)); // free top boundary
    for (int j = 1; j <= spec.rows(); ++j) {
        std::vector<std::pair<Rational, Rational>> factors;
        factors.reserve(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) factors.emplace_back(spec.b(j, k), spec.c(j, k));
        v = build_monodromy(factors).c.apply(v);
    }
    return v[0]; // projection onto the all-up bottom boundary
}

} // namespace pdwbc
