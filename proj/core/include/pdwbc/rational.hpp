#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdwbc {

using Integer = mpz_class;

// Thrown when a size/tractability guard rejects an input (CLI exit code 3).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when coincident inhomogeneity parameters would make a determinant
// formula degenerate; the confluent variants must be used instead.
class degenerate_input_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/*
 * Arbitrary-precision rational number.
 *
 * Invariants: always in lowest terms, denominator > 0, canonical zero is 0/1.
 * Values are immutable-by-convention after construction and safe to share
 * between threads; every operation returns a fresh canonical value.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    // Accepts "p/q", integer, or decimal strings; decimals convert exactly
    // ("0.25" -> 1/4). Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const;

    // Integer exponent; negative exponents require a nonzero value.
    Rational pow(long e) const;
    Rational inv() const { Rational r(1); r /= *this; return r; }

    double to_double() const { return v_.get_d(); }
    std::string str() const;               // "p/q", or "p" when integral
    std::string decimal(int digits) const; // display only

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

// log|x| for big integers/rationals far outside double range: mantissa plus
// bit-length, ~1e-15 relative error. Throws std::domain_error on zero.
double log_abs(const Integer& z);
double log_abs(const Rational& q);

// n! with a lazily grown thread-local cache (Hankel entries reuse them heavily).
const Integer& factorial(unsigned long n);

Integer binomial(unsigned long n, unsigned long k);

// Generalized binomial x(x-1)...(x-k+1)/k! for integer x of either sign;
// zero when 0 <= x < k.
Rational binomial_general(const Rational& x, unsigned long k);

// (a)_k = a(a+1)...(a+k-1)
Rational pochhammer(const Rational& a, unsigned long k);

Integer int_pow(const Integer& base, unsigned long e);

} // namespace pdwbc
