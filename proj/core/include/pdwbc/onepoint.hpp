#pragma once

#include "pdwbc/lattice.hpp"
#include "pdwbc/poly.hpp"
#include "pdwbc/rational.hpp"

#include <array>
#include <vector>

namespace pdwbc {

/*
 * Boundary one-point function g(m,s): probability that a line exits through
 * the top edge of column m on the semi-infinite strip with s rows. The
 * primary representation is an exact polynomial in t of degree <= m+s-1
 * (g(m,s) at t=0 is the step 1{m<=s}; the polynomial carries a factor 1-t);
 * scalar evaluation and the alternative representations below must agree
 * with it exactly.
 */

// Terminating series: sum_{j=0}^{min(m,s)-1} C(m-1,j) (1-t)^(2j+1) t^(m-1-j)
// times the j-th Hasse derivative of 1 + t + ... + t^(s-1).
Poly g_series(int m, int s);

// Direct scalar evaluation of the same sum; usable far beyond the range
// where building the full polynomial is sensible.
Rational g_series_at(int m, int s, const Rational& t);

// Order-s residue at w = t of w^(m-1) ((1-2t+tw)/(w-t))^s / (1-w), by
// truncated-series expansion with the pole factored out.
Rational g_residue_homogeneous(int m, int s, const Rational& t);

// Semi-infinite strip with distinct row parameters: sum of the simple-pole
// residues at w = t_j.
Rational g_semiinf_inhomogeneous(const std::vector<Rational>& t_rows, int m);

// Finite N with distinct row parameters: residue sum of the determinant
// integrand divided by the partial-homogeneous partition function. Rejects
// parameter sets where 1 - 2 t_i + t_i t_j = 0 (the determinant entry's pole
// pinches the contour at w = t_j and the simple-pole residue sum breaks).
Rational g_finite_n(const std::vector<Rational>& t_rows, int n, int m);

// Residue bookkeeping at w = 1 of the same integrand; equals the partition
// function exactly (this is the up-arrow complementarity route).
Rational finite_n_residue_at_one(const std::vector<Rational>& t_rows, int n);

// Jacobi polynomial P_n^(alpha,beta)(1-2t) through the coefficient-extraction
// form of the Rodrigues formula; negative integer beta (down to n+beta = -1)
// is handled by exact series division.
Rational jacobi_eval(int n, int alpha, int beta, const Rational& t);

// t^(m-s) sum_{j=0}^{s} C(s,j) (-t)^j P_{s-1}^{(m-s, j-s)}(1-2t).
Rational g_jacobi(int m, int s, const Rational& t);

// Coordinate Bethe form of the fixed-exit partition function, distinct row
// parameters: permutation sum with the c-weight prefactors.
Rational z_exit_coordinate(const ExitPattern& pattern, const std::vector<Rational>& t_rows);

// The bare s-fold residue at z_j = t of
// prod z_j^(r_j-1)/(z_j-t)^s prod p(z_j,z_k), p(x,y) = (x-y)(1-2x+xy).
// Guarded at s <= 5.
Rational z_exit_residue_raw(const ExitPattern& pattern, const Rational& t);

// The same residue normalized to the brute-force enumeration: the raw
// integral carries no c-weights, and reconciling it against the oracle at
// s = 1, 2, 3 fixes the missing prefactor to (1-t)^s.
Rational z_exit_homogeneous(const ExitPattern& pattern, const Rational& t);

// Truncated exit-pattern decomposition: sum of z_exit_homogeneous over all
// patterns within {1..max_column} containing m (Z = 1 on the semi-infinite
// strip). Converges to g_series(m,s)(t) geometrically in max_column.
Rational g_from_exit_sum(int m, int s, const Rational& t, int max_column);

// Terminating Gauss series: a must be a nonpositive integer.
Rational hyp2f1_terminating(long a, long b, long c, const Rational& z);

// Closed forms of the finite differences g(m,s)-g(m,s-1) and
// g(m,s)-g(m-1,s), as exact polynomials (g(m,0) := 0; delta_m needs m >= 2).
Poly delta_s(int m, int s);
Poly delta_m(int m, int s);

// Coefficient polynomials {A, B, C} of the second-order ODE
// A y'' + B y' + C y = 0 satisfied by y = dg/dt. Transcribed once; shared by
// ode_residual and the asymptotic expansion checks, and unit-tested at
// (m,s) = (1,1) where everything is hand-checkable. Taking m, s as rationals
// lets callers substitute m = mu*s symbolically.
std::array<Poly, 3> ode_coefficients(const Rational& m, const Rational& s);

// A y'' + B y' + C y with y = d/dt g_series(m,s); identically zero.
Poly ode_residual(int m, int s);

} // namespace pdwbc
