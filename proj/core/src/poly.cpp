#include "pdwbc/poly.hpp"

#include <sstream>

namespace pdwbc {

Poly::Poly(const Rational& c0) {
    if (!c0.is_zero()) c_.push_back(c0);
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::monomial(const Rational& coef, unsigned deg) {
    Poly p;
    if (!coef.is_zero()) {
        p.c_.assign(deg + 1, Rational(0));
        p.c_[deg] = coef;
    }
    return p;
}

Poly Poly::geometric(unsigned s) {
    Poly p;
    p.c_.assign(s, Rational(1));
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly operator*(const Rational& s, Poly p) {
    if (s.is_zero()) return Poly();
    for (auto& x : p.c_) x *= s;
    return p;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    }
    r.trim();
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Rational(1));
    Poly base(*this);
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

Poly Poly::mul_tpow(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Poly Poly::div_tpow_exact(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    if (c_.size() < k) throw std::domain_error("division by t^k not exact");
    for (unsigned i = 0; i < k; ++i) {
        if (!c_[i].is_zero()) throw std::domain_error("division by t^k not exact");
    }
    Poly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

} // namespace pdwbc
