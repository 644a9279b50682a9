#pragma once

#include "pdwbc/lattice.hpp"
#include "pdwbc/matrix.hpp"
#include "pdwbc/rational.hpp"

#include <vector>

namespace pdwbc {

// R-matrix entry functions; pole at mu = nu.
Rational f_fun(const Rational& mu, const Rational& nu);
Rational g_fun(const Rational& mu, const Rational& nu);

// 4x4 vertex operator b(lambda,nu)*Id + c(lambda,nu)*P on C^2 (x) C^2.
RMatrix build_L(const Rational& lambda, const Rational& nu);

// 4x4 R-matrix R(nu,mu) intertwining L(.,nu) with L(.,mu).
RMatrix build_R(const Rational& nu, const Rational& mu);

// Checks R12(nu,mu) L13(lambda,nu) L23(lambda,mu) =
//        L23(lambda,mu) L13(lambda,nu) R12(nu,mu) entrywise on C^2^(x)3.
bool verify_rll(const Rational& lambda, const Rational& nu, const Rational& mu);

/*
 * Monodromy matrix: ordered product of L-operators sharing one auxiliary
 * C^2 space, written as a 2x2 block matrix [[A,B],[C,D]] of exact operators
 * on the 2^n-dimensional quantum space. Blocks are grown one Kronecker
 * factor at a time rather than materializing the (n+1)-site operator. The
 * same builder serves both sweep directions: a row sweep (auxiliary space
 * horizontal, quantum spaces the columns) and a column sweep (auxiliary
 * space vertical, quantum spaces the rows); only the per-factor weights
 * differ.
 */
struct Monodromy {
    RMatrix a, b, c, d;
};

// Factors given as (b_i, c_i) weight pairs, leftmost factor first.
Monodromy build_monodromy(const std::vector<std::pair<Rational, Rational>>& factors);

// Column-sweep monodromy T(nu) = L(lambda_s,nu)...L(lambda_1,nu); blocks act
// on the 2^s-dimensional row space.
Monodromy monodromy_sweep_rows(const std::vector<Rational>& lambdas, const Rational& nu);

// Commutativity [A(nu),A(mu)] = [B(nu),B(mu)] = 0 and the two A/B exchange
// relations, checked exactly on 2^n x 2^n blocks. Guarded at 2^n <= 16.
bool verify_ab_algebra(const std::vector<Rational>& lambdas, const Rational& nu,
                       const Rational& mu);

// RTT relation for the row-sweep monodromy, optionally dressed as
// K_left T K_right with scalar 2x2 matrices (gl2-invariance).
bool verify_rtt(const std::vector<Rational>& lambdas, const Rational& nu, const Rational& mu,
                const RMatrix& k_left, const RMatrix& k_right);
bool verify_rtt(const std::vector<Rational>& lambdas, const Rational& nu, const Rational& mu);

// Partition function as the matrix element <up...up| C(lambda_s)...C(lambda_1)
// |free>, computed by explicit matrix-vector products. Guarded at 2^N <= 256.
Rational z_bracket(const LatticeSpec& spec);

} // namespace pdwbc
