#pragma once

#include "pdwbc/rational.hpp"

#include <vector>

namespace pdwbc {

/*
 * Closed forms for the pDWBC partition function with rational weights.
 *
 * Coincident inhomogeneity parameters are rejected rather than resolved by
 * confluent determinants; the confluent limits exist as separate closed
 * forms (z_partial_homogeneous, z_homogeneous) and must be called directly.
 */

// N x N determinant with phi rows for i <= s and monomial rows below.
// Requires distinct lambdas, distinct nus, and lambda_j - nu_k away from
// {0, -1}.
Rational z_foda_wheeler(const std::vector<Rational>& lambdas, const std::vector<Rational>& nus);

// s x s determinant over the row rapidities; requires distinct lambdas and
// lambda_j - nu_k != -1.
Rational z_kostov(const std::vector<Rational>& lambdas, const std::vector<Rational>& nus);

// n-th derivative of phi(lambda) = 1/(lambda(lambda+1)) in terms of
// t = lambda/(1+lambda):  (-1)^n n! ((1-t)/t)^(n+1) (1 - t^(n+1)).
Rational varphi_derivative(unsigned n, const Rational& t);

// Partial homogeneous limit (distinct row parameters t_j in (0,1), all
// column rapidities zero).
Rational z_partial_homogeneous(const std::vector<Rational>& t_rows, int n);

// Fully homogeneous model: Hankel determinant with factorial prefactors.
Rational z_homogeneous(const Rational& t, int s, int n);

// det[(alpha+i+j-2)!] evaluated both by elimination and as the closed
// product prod_j (alpha+j)! j!; throws std::logic_error if the two disagree.
Integer hankel_factorial_det(unsigned alpha, int s);

namespace detail {
// The phi-derivative determinant form of the partial homogeneous partition
// function, kept as an internal consistency check against the simplified
// z_partial_homogeneous.
Rational z_partial_homogeneous_phi_form(const std::vector<Rational>& t_rows, int n);
} // namespace detail

} // namespace pdwbc
