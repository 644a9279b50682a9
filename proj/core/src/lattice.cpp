#include "pdwbc/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdwbc {

ExitPattern::ExitPattern(std::vector<int> cols) : columns(std::move(cols)) {
    if (columns.empty()) throw std::invalid_argument("exit pattern is empty");
    for (size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] < 1 || (i > 0 && columns[i] <= columns[i - 1])) {
            throw std::invalid_argument("exit pattern must be strictly increasing and >= 1");
        }
    }
}

bool ExitPattern::contains(int m) const {
    return std::binary_search(columns.begin(), columns.end(), m);
}

Rational b_weight(const Rational& lambda, const Rational& nu) {
    const Rational d = lambda - nu;
    if (d == Rational(-1)) throw std::domain_error("weight pole: lambda - nu = -1");
    return d / (d + Rational(1));
}

Rational c_weight(const Rational& lambda, const Rational& nu) {
    const Rational d = lambda - nu;
    if (d == Rational(-1)) throw std::domain_error("weight pole: lambda - nu = -1");
    return (d + Rational(1)).inv();
}

LatticeSpec LatticeSpec::homogeneous(int s, int n, const Rational& t) {
    LatticeSpec spec;
    spec.s_ = s;
    spec.n_ = n;
    spec.t_ = t;
    if (t < Rational(0) || t >= Rational(1)) {
        throw std::domain_error("homogeneous weight t must satisfy 0 <= t < 1");
    }
    spec.validate();
    return spec;
}

LatticeSpec LatticeSpec::inhomogeneous(std::vector<Rational> lambdas, std::vector<Rational> nus) {
    LatticeSpec spec;
    spec.s_ = static_cast<int>(lambdas.size());
    spec.n_ = static_cast<int>(nus.size());
    spec.lambda_ = std::move(lambdas);
    spec.nu_ = std::move(nus);
    for (const auto& l : spec.lambda_) {
        for (const auto& v : spec.nu_) {
            if (l - v == Rational(-1)) {
                throw std::domain_error("singular weights: lambda_j - nu_k = -1");
            }
        }
    }
    spec.validate();
    return spec;
}

LatticeSpec LatticeSpec::partial_homogeneous(std::vector<Rational> t_rows, int n) {
    std::vector<Rational> lambdas;
    lambdas.reserve(t_rows.size());
    for (const auto& t : t_rows) {
        if (t <= Rational(0) || t >= Rational(1)) {
            throw std::domain_error("row parameter t_j must lie in (0,1)");
        }
        lambdas.push_back(t / (Rational(1) - t));
    }
    return inhomogeneous(std::move(lambdas), std::vector<Rational>(n, Rational(0)));
}

void LatticeSpec::validate() const {
    if (s_ < 1) throw std::invalid_argument("lattice needs at least one row");
    if (n_ < s_) throw std::invalid_argument("lattice requires s <= N");
}

const Rational& LatticeSpec::t() const {
    if (!t_) throw std::logic_error("not a homogeneous lattice");
    return *t_;
}

Rational LatticeSpec::b(int j, int k) const {
    if (t_) return *t_;
    return b_weight(lambda_[j - 1], nu_[k - 1]);
}

Rational LatticeSpec::c(int j, int k) const {
    if (t_) return Rational(1) - *t_;
    return c_weight(lambda_[j - 1], nu_[k - 1]);
}

namespace {

void check_enumeration_guard(const LatticeSpec& spec) {
    if (spec.cols() > 7 || spec.rows() * spec.cols() > 30) {
        throw resource_error("enumeration guard: requires s <= N <= 7 and s*N <= 30");
    }
}

// Weight vector indexed by the horizontal-edge bitmask between two columns;
// bit j-1 set means a line enters row j from the left.
using StateVector = std::vector<Rational>;

/*
 * Processes one column: the vertical flow runs bottom (row s) to top (row 1),
 * branching at the two lone-line vertices: a lone horizontal line passes (b)
 * or turns up (c); a lone vertical line passes up (b) or turns right (c);
 * empty and doubly-occupied vertices are deterministic with weight a = 1.
 * `top` constrains the top edge of this column: -1 free, 0 empty, 1 line.
 */
StateVector transfer_column(const LatticeSpec& spec, int k, const StateVector& in, int top) {
    const int s = spec.rows();
    StateVector out(in.size(), Rational(0));

    for (unsigned mask = 0; mask < in.size(); ++mask) {
        if (in[mask].is_zero()) continue;

        struct Frame {
            int j;          // row about to be processed (s down to 1)
            bool v;         // vertical line entering from below
            unsigned omask; // horizontal outputs accumulated so far
            Rational w;
        };
        std::vector<Frame> stack{{s, false, 0u, in[mask]}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.j == 0) {
                const int exit = f.v ? 1 : 0;
                if (top == -1 || top == exit) out[f.omask] += f.w;
                continue;
            }
            const bool h = (mask >> (f.j - 1)) & 1u;
            const unsigned hbit = 1u << (f.j - 1);
            if (h == f.v) {
                // both or neither: deterministic a-vertex
                stack.push_back({f.j - 1, f.v, h ? (f.omask | hbit) : f.omask, f.w});
            } else {
                const Rational bw = spec.b(f.j, k);
                const Rational cw = spec.c(f.j, k);
                if (h) {
                    if (!bw.is_zero()) stack.push_back({f.j - 1, false, f.omask | hbit, f.w * bw});
                    if (!cw.is_zero()) stack.push_back({f.j - 1, true, f.omask, f.w * cw});
                } else {
                    if (!bw.is_zero()) stack.push_back({f.j - 1, true, f.omask, f.w * bw});
                    if (!cw.is_zero()) stack.push_back({f.j - 1, false, f.omask | hbit, f.w * cw});
                }
            }
        }
    }
    return out;
}

// top_of(k) returns the top-edge constraint for column k.
template <typename TopFn>
Rational run_transfer(const LatticeSpec& spec, TopFn top_of) {
    const int s = spec.rows();
    StateVector state(1u << s, Rational(0));
    state[(1u << s) - 1] = Rational(1); // all lines enter from the left
    for (int k = 1; k <= spec.cols(); ++k) {
        state = transfer_column(spec, k, state, top_of(k));
    }
    return state[0]; // right boundary carries no lines
}

} // namespace

Rational z_bruteforce(const LatticeSpec& spec) {
    check_enumeration_guard(spec);
    return run_transfer(spec, [](int) { return -1; });
}

Rational z_exitpattern_bruteforce(const LatticeSpec& spec, const ExitPattern& pattern) {
    check_enumeration_guard(spec);
    if (pattern.size() != spec.rows() || pattern.last() > spec.cols()) {
        throw std::invalid_argument("exit pattern must have s entries within 1..N");
    }
    return run_transfer(spec, [&](int k) { return pattern.contains(k) ? 1 : 0; });
}

Rational g_down_bruteforce(const LatticeSpec& spec, int m) {
    check_enumeration_guard(spec);
    if (m < 1 || m > spec.cols()) throw std::invalid_argument("column index m out of range");
    const Rational z = run_transfer(spec, [](int) { return -1; });
    if (z.is_zero()) throw std::domain_error("vanishing partition function");
    const Rational restricted = run_transfer(spec, [&](int k) { return k == m ? 1 : -1; });
    return restricted / z;
}

} // namespace pdwbc
