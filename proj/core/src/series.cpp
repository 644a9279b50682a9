#include "pdwbc/series.hpp"

#include <stdexcept>

namespace pdwbc {

TruncSeries::TruncSeries(const Rational& center, unsigned order)
    : center_(center), order_(order), c_(order + 1, Rational(0)) {}

TruncSeries TruncSeries::constant(const Rational& center, unsigned order, const Rational& value) {
    TruncSeries s(center, order);
    s.c_[0] = value;
    return s;
}

TruncSeries TruncSeries::affine(const Rational& center, unsigned order,
                                const Rational& a0, const Rational& a1) {
    TruncSeries s(center, order);
    s.c_[0] = a0;
    if (order >= 1) s.c_[1] = a1;
    return s;
}

TruncSeries TruncSeries::from_coeffs(const Rational& center, std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("series needs at least the constant term");
    TruncSeries s(center, static_cast<unsigned>(coeffs.size() - 1));
    s.c_ = std::move(coeffs);
    return s;
}

const Rational& TruncSeries::coeff(unsigned k) const {
    if (k > order_) throw std::out_of_range("series coefficient beyond truncation order");
    return c_[k];
}

void TruncSeries::check_compatible(const TruncSeries& a, const TruncSeries& b) {
    if (a.center_ != b.center_ || a.order_ != b.order_) {
        throw std::invalid_argument("series arithmetic requires matching center and order");
    }
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_compatible(a, b);
    TruncSeries r(a);
    for (unsigned k = 0; k <= r.order_; ++k) r.c_[k] += b.c_[k];
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_compatible(a, b);
    TruncSeries r(a);
    for (unsigned k = 0; k <= r.order_; ++k) r.c_[k] -= b.c_[k];
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_compatible(a, b);
    TruncSeries r(a.center_, a.order_);
    for (unsigned i = 0; i <= a.order_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= a.order_; ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncSeries operator*(const Rational& s, TruncSeries a) {
    for (auto& x : a.c_) x *= s;
    return a;
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0].is_zero()) {
        throw std::domain_error(
            "series division needs a nonzero constant term (factor the pole explicitly)");
    }
    TruncSeries r(center_, order_);
    const Rational inv0 = c_[0].inv();
    r.c_[0] = inv0;
    for (unsigned k = 1; k <= order_; ++k) {
        Rational acc(0);
        for (unsigned j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -inv0 * acc;
    }
    return r;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_compatible(a, b);
    return a * b.inverse();
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.center_ == b.center_ && a.order_ == b.order_ && a.c_ == b.c_;
}

TruncSeries TruncSeries::pow(unsigned long e) const {
    TruncSeries r = constant(center_, order_, Rational(1));
    TruncSeries base(*this);
    while (e > 0) {
        if (e & 1ul) r = r * base;
        e >>= 1ul;
        if (e > 0) base = base * base;
    }
    return r;
}

} // namespace pdwbc
