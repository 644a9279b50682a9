#pragma once

#include "pdwbc/rational.hpp"

#include <string>
#include <vector>

namespace pdwbc {

/*
 * Univariate polynomial in the weight parameter t with Rational coefficients,
 * stored by ascending degree with trailing zeros trimmed. The zero polynomial
 * has an empty coefficient vector and degree() == -1.
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c0);
    static Poly from_coeffs(std::vector<Rational> coeffs);
    static Poly monomial(const Rational& coef, unsigned deg);
    // 1 + t + ... + t^(s-1), the expanded form of (1 - t^s)/(1 - t).
    static Poly geometric(unsigned s);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, Poly p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    Poly pow(unsigned e) const;
    Rational eval(const Rational& x) const;

    // Multiply / exactly divide by t^k; division throws std::domain_error if
    // any of the k lowest coefficients is nonzero.
    Poly mul_tpow(unsigned k) const;
    Poly div_tpow_exact(unsigned k) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace pdwbc
