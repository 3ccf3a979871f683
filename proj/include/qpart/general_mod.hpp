#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpart/det.hpp"
#include "qpart/integers.hpp"
#include "qpart/partition.hpp"
#include "qpart/series.hpp"

namespace qpart {

namespace detail {

inline std::vector<long> divisors(long n) {
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline int mobius(long n) {
    int primes = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // square factor
        ++primes;
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

inline long sigma_divisors(long n) {
    long s = 0;
    for (long d : divisors(n)) s += d;
    return s;
}

}  // namespace detail

// The root-of-unity product prod_{j=0}^{N-1} (w^j q)_inf with w = e^(2*pi*i/N),
// computed in pure integer arithmetic: the N factors contributed by each
// underlying (1 - w^(jk) q^k) collapse to (1 - q^(lcm(k,N)))^gcd(k,N), and
// those binomials are multiplied in directly. Supported only on exponents
// divisible by N, which the float oracle below confirms independently.
inline TruncatedSeries<Int> d_full(long N, long order) {
    if (N < 1) throw std::invalid_argument("d_full: modulus must be >= 1");
    if (order < 0) throw std::invalid_argument("d_full: order must be >= 0");
    std::vector<Int> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (long k = 1; k <= order; ++k) {
        const long g = std::gcd(k, N);
        const long L = (k / g) * N;  // lcm(k, N)
        if (L > order) continue;
        for (long rep = 0; rep < g; ++rep)
            for (long i = order; i >= L; --i) c[i] -= c[i - L];
    }
    return TruncatedSeries<Int>(std::move(c));
}

// The same product evaluated numerically at the actual complex roots of
// unity, rounded to integers. Self-certifying: max_residue records how far
// the computed values sat from integers (and from the real axis); if that
// is not comfortably small the oracle refuses rather than guess.
struct FloatProductResult {
    std::vector<Int> coeffs;
    double max_residue = 0.0;
};

inline FloatProductResult d_full_float(long N, long order,
                                       double residue_limit = 0.25) {
    if (N < 1) throw std::invalid_argument("d_full_float: modulus must be >= 1");
    if (order < 0) throw std::invalid_argument("d_full_float: order must be >= 0");
    using C = std::complex<double>;
    const double two_pi = 8.0 * std::atan(1.0);

    // Sparse pentagonal expansion of one eta factor.
    std::vector<std::pair<long, int>> pent = {{0, +1}};
    for (long j = 1; j * (3 * j - 1) / 2 <= order; ++j) {
        const int sgn = (j % 2 != 0) ? -1 : 1;
        pent.emplace_back(j * (3 * j - 1) / 2, sgn);
        if (j * (3 * j + 1) / 2 <= order) pent.emplace_back(j * (3 * j + 1) / 2, sgn);
    }

    std::vector<C> acc(static_cast<std::size_t>(order) + 1);
    acc[0] = 1.0;
    for (long f = 0; f < N; ++f) {
        std::vector<C> next(acc.size());
        for (const auto& [e, s] : pent) {
            const C w = static_cast<double>(s) *
                        std::polar(1.0, two_pi * static_cast<double>((f * e) % N) /
                                            static_cast<double>(N));
            for (long i = 0; i + e <= order; ++i) next[i + e] += w * acc[i];
        }
        acc = std::move(next);
    }

    FloatProductResult out;
    out.coeffs.reserve(acc.size());
    for (const C& v : acc) {
        const double near = std::nearbyint(v.real());
        out.max_residue = std::max(out.max_residue,
                                   std::max(std::abs(v.real() - near),
                                            std::abs(v.imag())));
        out.coeffs.emplace_back(static_cast<long>(std::llround(v.real())));
    }
    if (!(out.max_residue < residue_limit))
        throw std::domain_error("d_full_float: order beyond float-oracle reliability"
                                " (residue " + std::to_string(out.max_residue) + ")");
    return out;
}

// Determinant denominator for modulus N. By Moebius inversion over the
// gcd classes, d_full(N) = prod_{t | N} ((q^(Nt))_inf)^(mu(t) * sigma(N/t)),
// which carries negative eta exponents whenever N has a nontrivial
// squarefree divisor (d_full(7) is (q^7)^8 / (q^49)). Those reciprocal
// factors are common to the numerator and denominator of the p(n)
// generating identity, so they cancel from the determinant columns;
// keeping only the positive part,
//   d_reduced(N) = prod_{t | N, mu(t) = 1} ((q^(Nt))_inf)^(sigma(N/t)),
// leaves every determinant value unchanged and makes the modulus-7
// instance reproduce the classical (q^7)^8 band and Z columns exactly.
// Prime N gives ((q^N)_inf)^(N+1); N = 1 gives (q)_inf.
inline TruncatedSeries<Int> d_reduced(long N, long order) {
    if (N < 1) throw std::invalid_argument("d_reduced: modulus must be >= 1");
    auto acc = TruncatedSeries<Int>::one(order);
    for (long t : detail::divisors(N))
        if (detail::mobius(t) == 1)
            acc = mul(acc, pow(etaq(N * t, order), detail::sigma_divisors(N / t)));
    return acc;
}

// The N residue series Z^(0)..Z^(N-1): the numerator d_reduced(N)/(q)_inf
// split by exponent residue. zser[a] coefficient k feeds the determinant
// for p(kN+a); its constant term is p(a).
inline std::vector<TruncatedSeries<Int>> z_general(long N, long order) {
    if (N < 1) throw std::invalid_argument("z_general: modulus must be >= 1");
    if (order < 0) throw std::invalid_argument("z_general: order must be >= 0");
    const long K = N * order + N - 1;
    const auto num = mul(d_reduced(N, K), invert(etaq(1, K)));
    std::vector<TruncatedSeries<Int>> out;
    out.reserve(static_cast<std::size_t>(N));
    for (long a = 0; a < N; ++a) out.push_back(decimate(num, N, a));
    return out;
}

// Everything needed to evaluate p(kN+a) determinants for one modulus:
// the denominator series (in q, supported on multiples of N) and the N
// residue columns. Validated on construction, including after JSON load.
struct ModulusPlan {
    long N;
    TruncatedSeries<Int> dser;
    std::vector<TruncatedSeries<Int>> zser;

    ModulusPlan(long modulus, TruncatedSeries<Int> d,
                std::vector<TruncatedSeries<Int>> z)
        : N(modulus), dser(std::move(d)), zser(std::move(z)) {
        if (N < 1) throw std::invalid_argument("ModulusPlan: modulus must be >= 1");
        if (static_cast<long>(zser.size()) != N)
            throw std::invalid_argument("ModulusPlan: expected one Z series per residue");
        if (dser.coeff(0) != 1)
            throw std::domain_error("ModulusPlan: D series constant term is not 1");
        for (long i = 1; i <= dser.order(); ++i)
            if (i % N != 0 && dser.coeff(i) != 0)
                throw std::domain_error("ModulusPlan: D series has support off multiples of N");
        const auto small = p_euler(N - 1 > 0 ? N - 1 : 0);
        for (long a = 0; a < N; ++a)
            if (zser[a].coeff(0) != small.p(a))
                throw std::domain_error("ModulusPlan: Z^(" + std::to_string(a) +
                                        ") constant term is not p(" +
                                        std::to_string(a) + ")");
    }

    // Largest k this plan can serve.
    long max_k() const {
        long k = dser.order() / N;
        for (const auto& z : zser) k = std::min(k, z.order());
        return k;
    }
};

// Build a plan able to serve all k up to korder.
inline ModulusPlan make_plan(long N, long korder) {
    if (N < 1) throw std::invalid_argument("make_plan: modulus must be >= 1");
    if (korder < 0) throw std::invalid_argument("make_plan: korder must be >= 0");
    const long K = N * korder + N - 1;
    auto dser = d_reduced(N, K);
    const auto num = mul(dser, invert(etaq(1, K)));
    std::vector<TruncatedSeries<Int>> zs;
    zs.reserve(static_cast<std::size_t>(N));
    for (long a = 0; a < N; ++a) zs.push_back(decimate(num, N, a));
    return ModulusPlan(N, std::move(dser), std::move(zs));
}

// Slice one determinant instance out of a plan: band D_N, D_2N, .., D_kN
// read off the denominator, final column Z^(a)_0..k.
inline DetProblem plan_problem(const ModulusPlan& plan, long a, long k) {
    if (a < 0 || a >= plan.N)
        throw std::invalid_argument("plan_problem: residue out of range");
    if (k < 0 || k > plan.max_k())
        throw std::invalid_argument("plan_problem: k " + std::to_string(k) +
                                    " outside plan capacity " +
                                    std::to_string(plan.max_k()));
    std::vector<Int> dcol;
    dcol.reserve(static_cast<std::size_t>(k));
    for (long j = 1; j <= k; ++j) dcol.push_back(plan.dser.coeff(plan.N * j));
    const auto& z = plan.zser[static_cast<std::size_t>(a)].coeffs();
    std::vector<Int> zcol(z.begin(), z.begin() + k + 1);
    return DetProblem(std::move(dcol), std::move(zcol));
}

// The (k+1)-dimensional instance for p(kN+a); modulus 7 reproduces
// build_mod7 exactly and modulus 1 reproduces build_eq1.
inline DetProblem build_general(long N, long a, long k) {
    return plan_problem(make_plan(N, k), a, k);
}

}  // namespace qpart
