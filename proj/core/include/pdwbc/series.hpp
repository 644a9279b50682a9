#pragma once

#include "pdwbc/rational.hpp"

#include <vector>

namespace pdwbc {

/*
 * Truncated power series around a rational expansion point: coefficients of
 * (w - center)^0 .. (w - center)^K. Arithmetic never silently extends beyond
 * the truncation order; mixing different centers or orders is rejected. The
 * truncation order for a residue computation is pole order - 1 plus the
 * requested coefficient index, which is statically known for every pole in
 * this project (order s, or simple).
 */
class TruncSeries {
public:
    TruncSeries(const Rational& center, unsigned order);
    static TruncSeries constant(const Rational& center, unsigned order, const Rational& value);
    // a0 + a1 * (w - center)
    static TruncSeries affine(const Rational& center, unsigned order,
                              const Rational& a0, const Rational& a1);
    static TruncSeries from_coeffs(const Rational& center, std::vector<Rational> coeffs);

    const Rational& center() const { return center_; }
    unsigned order() const { return order_; }
    // k must not exceed the truncation order.
    const Rational& coeff(unsigned k) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const Rational& s, TruncSeries a);
    // Requires a nonzero constant term in b; a pole must be factored out
    // explicitly by the caller beforehand.
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    TruncSeries pow(unsigned long e) const;
    TruncSeries inverse() const;

private:
    static void check_compatible(const TruncSeries& a, const TruncSeries& b);
    Rational center_;
    unsigned order_;
    std::vector<Rational> c_; // size order_ + 1
};

} // namespace pdwbc
