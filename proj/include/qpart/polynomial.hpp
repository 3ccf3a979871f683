#pragma once

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpart/integers.hpp"
#include "qpart/series.hpp"

namespace qpart {

// Univariate polynomial with exact integer coefficients, written in the
// formal variable a. Unlike a truncated series, a polynomial is a complete
// object: coefficients beyond the degree really are zero, so reading them
// is fine. Trailing zeros are normalized away; the zero polynomial has an
// empty coefficient list and degree -1.
template <typename I>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<I> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    Polynomial(std::initializer_list<I> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial monomial(I c, long expo) {
        if (expo < 0) throw std::invalid_argument("monomial exponent must be >= 0");
        std::vector<I> v(static_cast<std::size_t>(expo) + 1);
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    I coeff(long i) const {
        if (i < 0 || i > degree()) return I(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<I>& coeffs() const { return coeffs_; }

    friend bool operator==(const Polynomial& p, const Polynomial& r) {
        return p.coeffs_ == r.coeffs_;
    }
    friend bool operator!=(const Polynomial& p, const Polynomial& r) {
        return !(p == r);
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<I> coeffs_;
};

using Poly = Polynomial<Int>;

template <typename I>
Polynomial<I> poly_add(const Polynomial<I>& p, const Polynomial<I>& r) {
    std::vector<I> c(std::max(p.coeffs().size(), r.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = p.coeff(static_cast<long>(i)) + r.coeff(static_cast<long>(i));
    return Polynomial<I>(std::move(c));
}

template <typename I>
Polynomial<I> poly_neg(const Polynomial<I>& p) {
    std::vector<I> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -p.coeffs()[i];
    return Polynomial<I>(std::move(c));
}

template <typename I>
Polynomial<I> poly_sub(const Polynomial<I>& p, const Polynomial<I>& r) {
    return poly_add(p, poly_neg(r));
}

template <typename I>
Polynomial<I> poly_scale(const I& k, const Polynomial<I>& p) {
    std::vector<I> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * p.coeffs()[i];
    return Polynomial<I>(std::move(c));
}

template <typename I>
Polynomial<I> poly_mul(const Polynomial<I>& p, const Polynomial<I>& r) {
    if (p.is_zero() || r.is_zero()) return Polynomial<I>();
    std::vector<I> c(p.coeffs().size() + r.coeffs().size() - 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < r.coeffs().size(); ++j)
            c[i + j] += p.coeffs()[i] * r.coeffs()[j];
    }
    return Polynomial<I>(std::move(c));
}

// Horner evaluation of p at a series argument; the result carries the
// argument's truncation order.
template <typename I>
TruncatedSeries<I> poly_eval_series(const Polynomial<I>& p,
                                    const TruncatedSeries<I>& arg) {
    TruncatedSeries<I> r =
        TruncatedSeries<I>::constant(p.coeff(p.degree() < 0 ? 0 : p.degree()),
                                     arg.order());
    for (long i = p.degree() - 1; i >= 0; --i)
        r = add(mul(r, arg), TruncatedSeries<I>::constant(p.coeff(i), arg.order()));
    return r;
}

template <typename I>
Polynomial<I> operator+(const Polynomial<I>& p, const Polynomial<I>& r) {
    return poly_add(p, r);
}
template <typename I>
Polynomial<I> operator-(const Polynomial<I>& p, const Polynomial<I>& r) {
    return poly_sub(p, r);
}
template <typename I>
Polynomial<I> operator-(const Polynomial<I>& p) {
    return poly_neg(p);
}
template <typename I>
Polynomial<I> operator*(const Polynomial<I>& p, const Polynomial<I>& r) {
    return poly_mul(p, r);
}

template <typename I>
std::ostream& operator<<(std::ostream& os, const Polynomial<I>& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long i = 0; i <= p.degree(); ++i) {
        I c = p.coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
            first = false;
        } else {
            if (c < 0) { os << " - "; c = -c; }
            else os << " + ";
        }
        if (i == 0) os << c;
        else {
            if (c != 1) os << c << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

}  // namespace qpart
