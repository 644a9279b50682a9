#include "pdwbc/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace pdwbc {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();

    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string num(text.substr(0, slash));
        std::string den(text.substr(slash + 1));
        if (num.empty() || den.empty()) fail();
        try {
            // explicit base 10: the default base 0 reads "010" as octal
            return Rational(Integer(num, 10), Integer(den, 10));
        } catch (const std::invalid_argument&) {
            fail();
        }
    }

    // Integer or decimal: [-]digits[.digits]
    std::string digits;
    size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        if (text[0] == '-') digits.push_back('-');
        i = 1;
    }
    unsigned long frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '.') {
            if (seen_dot) fail();
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();
    Integer num(digits, 10);
    Integer den = int_pow(Integer(10), frac_len);
    return Rational(num, den);
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return Rational(0);
    }
    const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num = int_pow(numerator(), ae);
    Integer den = int_pow(denominator(), ae);
    return e > 0 ? Rational(num, den) : Rational(den, num);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 1) digits = 1;
    mpf_class f(v_, static_cast<unsigned>(digits) * 4 + 64);
    std::ostringstream os;
    os.precision(digits);
    os << f;
    return os.str();
}

double log_abs(const Integer& z) {
    if (sgn(z) == 0) throw std::domain_error("log of zero");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * M_LN2;
}

double log_abs(const Rational& q) {
    return log_abs(q.numerator()) - log_abs(q.denominator());
}

const Integer& factorial(unsigned long n) {
    thread_local std::vector<Integer> cache{Integer(1)};
    while (cache.size() <= n) {
        cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
    }
    return cache[n];
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational binomial_general(const Rational& x, unsigned long k) {
    Rational num(1);
    for (unsigned long i = 0; i < k; ++i) num *= x - Rational(static_cast<long>(i));
    return num / Rational(factorial(k));
}

Rational pochhammer(const Rational& a, unsigned long k) {
    Rational r(1);
    for (unsigned long i = 0; i < k; ++i) r *= a + Rational(static_cast<long>(i));
    return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace pdwbc
