#pragma once

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpart/integers.hpp"

namespace qpart {

// A formal power series in q, exact through q^order and unknown beyond.
//
// The representation is dense: exactly order+1 coefficients, index i
// holding the coefficient of q^i. Truncation is part of the value. Every
// operation states the order of its result, and binary operations return
// the smaller of the two operand orders, never more. Asking for a
// coefficient past the order throws; a silent zero there is how truncated
// series code grows quiet, long-lived bugs.
//
// Instances are immutable after construction: build a coefficient vector,
// then wrap it. All operations are pure, so values can be shared across
// threads freely.
template <typename I>
class TruncatedSeries {
public:
    // The zero series through q^order.
    explicit TruncatedSeries(long order)
        : coeffs_(static_cast<std::size_t>(checked_order(order)) + 1) {}

    // Takes [c0, c1, ..., cK]; the order is K.
    explicit TruncatedSeries(std::vector<I> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("a series carries at least its constant term");
    }

    static TruncatedSeries constant(I c, long order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    static TruncatedSeries one(long order) { return constant(I(1), order); }

    // c * q^expo, known through q^order.
    static TruncatedSeries monomial(I c, long expo, long order) {
        if (expo < 0 || expo > order)
            throw std::out_of_range("monomial exponent outside truncation order");
        TruncatedSeries s(order);
        s.coeffs_[static_cast<std::size_t>(expo)] = std::move(c);
        return s;
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Coefficient of q^i. Out of range includes i > order: the value there
    // is not zero, it is unknown.
    const I& coeff(long i) const {
        if (i < 0 || i > order())
            throw std::out_of_range("coefficient of q^" + std::to_string(i) +
                                    " requested from a series of order " +
                                    std::to_string(order()));
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<I>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const I& c) { return c == 0; });
    }

    // Equality is exact: same order and same coefficients. Truncate
    // explicitly before comparing series of different orders.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

private:
    static long checked_order(long order) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        return order;
    }

    std::vector<I> coeffs_;
};

using Series = TruncatedSeries<Int>;

namespace detail {
template <typename I>
long common_order(const TruncatedSeries<I>& a, const TruncatedSeries<I>& b) {
    return std::min(a.order(), b.order());
}
}  // namespace detail

template <typename I>
TruncatedSeries<I> add(const TruncatedSeries<I>& a, const TruncatedSeries<I>& b) {
    const long n = detail::common_order(a, b);
    std::vector<I> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
    return TruncatedSeries<I>(std::move(c));
}

template <typename I>
TruncatedSeries<I> sub(const TruncatedSeries<I>& a, const TruncatedSeries<I>& b) {
    const long n = detail::common_order(a, b);
    std::vector<I> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) c[i] = a.coeffs()[i] - b.coeffs()[i];
    return TruncatedSeries<I>(std::move(c));
}

template <typename I>
TruncatedSeries<I> neg(const TruncatedSeries<I>& a) {
    std::vector<I> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs()[i];
    return TruncatedSeries<I>(std::move(c));
}

template <typename I>
TruncatedSeries<I> scale(const I& k, const TruncatedSeries<I>& a) {
    std::vector<I> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coeffs()[i];
    return TruncatedSeries<I>(std::move(c));
}

// Cauchy product, exact to the shared order. Schoolbook convolution on
// purpose: orders here are desk-scale, and with mpz coefficients the
// fused accumulate below is a single mpz_addmul per term. Zero skipping
// matters because eta-type factors are pentagonally sparse.
template <typename I>
TruncatedSeries<I> mul(const TruncatedSeries<I>& a, const TruncatedSeries<I>& b) {
    const long n = detail::common_order(a, b);
    const auto& av = a.coeffs();
    const auto& bv = b.coeffs();
    std::vector<I> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        if (av[i] == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (bv[j] == 0) continue;
            c[i + j] += av[i] * bv[j];
        }
    }
    return TruncatedSeries<I>(std::move(c));
}

// Reciprocal within Z[[q]]: the constant term must be a unit of Z, i.e.
// +1 or -1. Then b_0 = c_0 and b_k = -c_0 * sum_{j=1..k} a_j b_{k-j}.
template <typename I>
TruncatedSeries<I> invert(const TruncatedSeries<I>& s) {
    const I& c0 = s.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("series not invertible over the integers");
    const long n = s.order();
    const auto& a = s.coeffs();
    std::vector<I> b(static_cast<std::size_t>(n) + 1);
    b[0] = c0;
    for (long k = 1; k <= n; ++k) {
        I acc = 0;
        for (long j = 1; j <= k; ++j) {
            if (a[j] == 0) continue;
            acc += a[j] * b[k - j];
        }
        b[k] = -acc * c0;
    }
    return TruncatedSeries<I>(std::move(b));
}

// Integer power by repeated squaring; e < 0 goes through invert and so
// requires a unit constant term.
template <typename I>
TruncatedSeries<I> pow(const TruncatedSeries<I>& s, long e) {
    if (e < 0) return pow(invert(s), -e);
    TruncatedSeries<I> r = TruncatedSeries<I>::one(s.order());
    TruncatedSeries<I> base = s;
    unsigned long m = static_cast<unsigned long>(e);
    while (m != 0) {
        if (m & 1UL) r = mul(r, base);
        m >>= 1UL;
        if (m != 0) base = mul(base, base);
    }
    return r;
}

// Shorten to a stated order. Extending is impossible: those coefficients
// were never computed.
template <typename I>
TruncatedSeries<I> truncate(const TruncatedSeries<I>& s, long order) {
    if (order < 0 || order > s.order())
        throw std::out_of_range("truncate: requested order " + std::to_string(order) +
                                " not within computed order " + std::to_string(s.order()));
    std::vector<I> c(s.coeffs().begin(), s.coeffs().begin() + order + 1);
    return TruncatedSeries<I>(std::move(c));
}

// Multiply by q^r (r >= 0). The result is exact through order + r: the
// new low coefficients are exactly zero and the old ones just moved up.
template <typename I>
TruncatedSeries<I> shift(const TruncatedSeries<I>& s, long r) {
    if (r < 0) throw std::invalid_argument("shift: negative exponent");
    std::vector<I> c(static_cast<std::size_t>(s.order() + r) + 1);
    std::copy(s.coeffs().begin(), s.coeffs().end(), c.begin() + r);
    return TruncatedSeries<I>(std::move(c));
}

// Multisection: keep exponents congruent to r mod N and reindex, so the
// result's coefficient of q^k is s's coefficient of q^(Nk+r). The result
// order floor((order - r)/N) is everything the input supports.
template <typename I>
TruncatedSeries<I> decimate(const TruncatedSeries<I>& s, long N, long r) {
    if (N < 1) throw std::invalid_argument("decimate: modulus must be >= 1");
    if (r < 0 || r >= N) throw std::invalid_argument("decimate: residue out of range");
    if (r > s.order())
        throw std::out_of_range("decimate: series order too small for residue");
    const long m = (s.order() - r) / N;
    std::vector<I> c(static_cast<std::size_t>(m) + 1);
    for (long k = 0; k <= m; ++k) c[k] = s.coeffs()[N * k + r];
    return TruncatedSeries<I>(std::move(c));
}

// Substitute q -> q^N; exactness scales with the exponent, so the result
// order is N * order.
template <typename I>
TruncatedSeries<I> inflate(const TruncatedSeries<I>& s, long N) {
    if (N < 1) throw std::invalid_argument("inflate: modulus must be >= 1");
    std::vector<I> c(static_cast<std::size_t>(N * s.order()) + 1);
    for (long k = 0; k <= s.order(); ++k) c[N * k] = s.coeffs()[k];
    return TruncatedSeries<I>(std::move(c));
}

// Expansion of prod_{k>=1} (1 - q^(mk)) via the pentagonal number
// theorem: exponents m*j(3j-1)/2 for all nonzero integers j, sign (-1)^j.
// O(order * sqrt(order)) and independent of plain factor multiplication,
// which the tests use as a cross-check.
template <typename I = Int>
TruncatedSeries<I> etaq(long m, long order) {
    if (m < 1) throw std::invalid_argument("etaq: modulus must be >= 1");
    if (order < 0) throw std::invalid_argument("etaq: order must be >= 0");
    std::vector<I> c(static_cast<std::size_t>(order) + 1);
    c[0] = I(1);
    const long limit = order / m;  // largest usable pentagonal number
    for (long j = 1; j * (3 * j - 1) / 2 <= limit; ++j) {
        const long g1 = j * (3 * j - 1) / 2;
        const long g2 = j * (3 * j + 1) / 2;
        const int sgn = (j % 2 != 0) ? -1 : 1;
        c[m * g1] += sgn;
        if (g2 <= limit) c[m * g2] += sgn;
    }
    return TruncatedSeries<I>(std::move(c));
}

template <typename I>
TruncatedSeries<I> operator+(const TruncatedSeries<I>& a, const TruncatedSeries<I>& b) {
    return add(a, b);
}
template <typename I>
TruncatedSeries<I> operator-(const TruncatedSeries<I>& a, const TruncatedSeries<I>& b) {
    return sub(a, b);
}
template <typename I>
TruncatedSeries<I> operator-(const TruncatedSeries<I>& a) {
    return neg(a);
}
template <typename I>
TruncatedSeries<I> operator*(const TruncatedSeries<I>& a, const TruncatedSeries<I>& b) {
    return mul(a, b);
}
template <typename I>
TruncatedSeries<I> operator*(const I& k, const TruncatedSeries<I>& a) {
    return scale(k, a);
}

// "1 - q - q^2 + O(q^8)" style rendering; primarily for test diagnostics.
template <typename I>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<I>& s) {
    bool first = true;
    for (long i = 0; i <= s.order(); ++i) {
        const I& c = s.coeffs()[i];
        if (c == 0) continue;
        I mag = c;
        if (first) {
            if (c < 0) { os << "-"; mag = -c; }
            first = false;
        } else {
            if (c < 0) { os << " - "; mag = -c; }
            else os << " + ";
        }
        const bool unit = (mag == 1);
        if (i == 0) os << mag;
        else {
            if (!unit) os << mag << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    os << " + O(q^" << (s.order() + 1) << ")";
    return os;
}

}  // namespace qpart
