#include "pdwbc/matrix.hpp"

#include <stdexcept>

namespace pdwbc {

RMatrix RMatrix::identity(size_t n) {
    RMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    RMatrix r(a);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    RMatrix r(a);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    const size_t n = a.n_;
    RMatrix r(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return r;
}

RMatrix operator*(const Rational& s, RMatrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
}

bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
}

RMatrix kron(const RMatrix& a, const RMatrix& b) {
    const size_t na = a.dim(), nb = b.dim();
    RMatrix r(na * nb);
    for (size_t ia = 0; ia < na; ++ia) {
        for (size_t ja = 0; ja < na; ++ja) {
            if (a.at(ia, ja).is_zero()) continue;
            for (size_t ib = 0; ib < nb; ++ib) {
                for (size_t jb = 0; jb < nb; ++jb) {
                    if (b.at(ib, jb).is_zero()) continue;
                    r.at(ia * nb + ib, ja * nb + jb) = a.at(ia, ja) * b.at(ib, jb);
                }
            }
        }
    }
    return r;
}

std::vector<Rational> RMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != n_) throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<Rational> r(n_, Rational(0));
    for (size_t i = 0; i < n_; ++i) {
        for (size_t j = 0; j < n_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

bool RMatrix::is_zero() const {
    for (const auto& x : a_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Rational RMatrix::det() const {
    std::vector<std::vector<Rational>> rows(n_);
    for (size_t i = 0; i < n_; ++i) {
        rows[i].assign(a_.begin() + static_cast<long>(i * n_),
                       a_.begin() + static_cast<long>((i + 1) * n_));
    }
    return det_exact(std::move(rows));
}

} // namespace pdwbc
