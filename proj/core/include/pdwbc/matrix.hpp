#pragma once

#include "pdwbc/det.hpp"
#include "pdwbc/rational.hpp"

#include <vector>

namespace pdwbc {

// Dense square matrix of exact rationals; sized for the QISM verification
// surface (dimension 2, 4, or 2^n with n small).
class RMatrix {
public:
    RMatrix() : n_(0) {}
    explicit RMatrix(size_t n) : n_(n), a_(n * n, Rational(0)) {}
    static RMatrix identity(size_t n);

    size_t dim() const { return n_; }
    Rational& at(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

    friend RMatrix operator+(const RMatrix& a, const RMatrix& b);
    friend RMatrix operator-(const RMatrix& a, const RMatrix& b);
    friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
    friend RMatrix operator*(const Rational& s, RMatrix a);
    friend bool operator==(const RMatrix& a, const RMatrix& b);
    friend bool operator!=(const RMatrix& a, const RMatrix& b) { return !(a == b); }

    // Kronecker product; index convention (i_a * dim_b + i_b).
    friend RMatrix kron(const RMatrix& a, const RMatrix& b);

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    bool is_zero() const;

    Rational det() const;

private:
    size_t n_;
    std::vector<Rational> a_;
};

} // namespace pdwbc
