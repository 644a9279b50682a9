#pragma once

#include "pdwbc/rational.hpp"

#include <optional>
#include <vector>

namespace pdwbc {

// Strictly increasing 1-based column indices of the top-boundary line exits.
struct ExitPattern {
    std::vector<int> columns;

    explicit ExitPattern(std::vector<int> cols);
    int size() const { return static_cast<int>(columns.size()); }
    int last() const { return columns.back(); }
    bool contains(int m) const;
};

/*
 * An s x N lattice with partial domain wall boundary conditions: lines enter
 * on all s left edges, the bottom and right boundaries are empty, the top
 * boundary is free. Weights are a = 1 everywhere and either a homogeneous
 * parameter t in [0,1) (b = t, c = 1-t) or per-site rational functions of
 * row/column rapidities. Rows are numbered 1..s top to bottom, columns 1..N
 * left to right.
 */
class LatticeSpec {
public:
    static LatticeSpec homogeneous(int s, int n, const Rational& t);
    static LatticeSpec inhomogeneous(std::vector<Rational> lambdas, std::vector<Rational> nus);
    // Row parameters t_j in (0,1) with all column rapidities zero
    // (lambda_j = t_j/(1-t_j), nu = 0).
    static LatticeSpec partial_homogeneous(std::vector<Rational> t_rows, int n);

    int rows() const { return s_; }
    int cols() const { return n_; }
    bool is_homogeneous() const { return t_.has_value(); }
    const Rational& t() const;
    const std::vector<Rational>& lambdas() const { return lambda_; }
    const std::vector<Rational>& nus() const { return nu_; }

    // Vertex weights at row j, column k (1-based).
    Rational b(int j, int k) const;
    Rational c(int j, int k) const;

private:
    LatticeSpec() = default;
    void validate() const;

    int s_ = 0;
    int n_ = 0;
    std::optional<Rational> t_;
    std::vector<Rational> lambda_;
    std::vector<Rational> nu_;
};

// Rational weight functions b, c of the rapidity difference. The only
// rejected difference is lambda - nu = -1 where both weights have a pole;
// lambda = nu (b = 0) is degenerate but admissible.
Rational b_weight(const Rational& lambda, const Rational& nu);
Rational c_weight(const Rational& lambda, const Rational& nu);

/*
 * Ground-truth partition functions by transfer over the 2^s horizontal-edge
 * bitmasks, column by column. Guarded at s <= N <= 7, s*N <= 30.
 */
Rational z_bruteforce(const LatticeSpec& spec);
Rational z_exitpattern_bruteforce(const LatticeSpec& spec, const ExitPattern& pattern);
// Probability that a line exits through the top edge of column m.
Rational g_down_bruteforce(const LatticeSpec& spec, int m);

} // namespace pdwbc
