#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpart/integers.hpp"
#include "qpart/ramanujan7.hpp"
#include "qpart/series.hpp"

namespace qpart {

// A quasi-triangular determinant instance: unit diagonal, the value D_j
// down the whole j-th subdiagonal, zeros above the diagonal, and an
// arbitrary final column Z_0..Z_k. All three determinant formulas in the
// library share this one shape. dcol may be longer than needed; entries
// past dim-1 are never read, which is tested.
class DetProblem {
public:
    DetProblem(std::vector<Int> dcol, std::vector<Int> zcol)
        : dcol_(std::move(dcol)), zcol_(std::move(zcol)) {
        if (zcol_.empty())
            throw std::invalid_argument("DetProblem: final column must be nonempty");
        if (dcol_.size() + 1 < zcol_.size())
            throw std::invalid_argument("DetProblem: band needs at least dim-1 entries");
    }

    long dim() const { return static_cast<long>(zcol_.size()); }
    const std::vector<Int>& dcol() const { return dcol_; }
    const std::vector<Int>& zcol() const { return zcol_; }

    friend bool operator==(const DetProblem& a, const DetProblem& b) {
        return a.dcol_ == b.dcol_ && a.zcol_ == b.zcol_;
    }
    friend bool operator!=(const DetProblem& a, const DetProblem& b) {
        return !(a == b);
    }

private:
    std::vector<Int> dcol_;
    std::vector<Int> zcol_;
};

// Production evaluator. Expanding the determinant along its last row gives
// the convolution recurrence
//   u_0 = Z_0,  u_k = Z_k - sum_{j=1..k} D_j u_(k-j),
// and the determinant is u_(dim-1). O(dim^2) exact integer operations.
inline Int det_eval_recurrence(const DetProblem& p) {
    const auto& d = p.dcol();
    const auto& z = p.zcol();
    const long K = p.dim() - 1;
    std::vector<Int> u(static_cast<std::size_t>(K) + 1);
    for (long k = 0; k <= K; ++k) {
        Int acc = z[k];
        for (long j = 1; j <= k; ++j) {
            if (d[j - 1] == 0) continue;
            acc -= d[j - 1] * u[k - j];
        }
        u[k] = std::move(acc);
    }
    return u[K];
}

// Falsifier: materialize the matrix and run fraction-free (Bareiss)
// elimination with row-swap pivoting. Exists to validate the recurrence
// independently, not to be fast; the checked exact divisions would expose
// any violation of the algorithm's divisibility guarantee.
inline Int det_eval_literal(const DetProblem& p, long cap = 600) {
    const long m = p.dim();
    if (m > cap)
        throw std::invalid_argument("det_eval_literal: dim " + std::to_string(m) +
                                    " exceeds cap " + std::to_string(cap));
    std::vector<std::vector<Int>> A(static_cast<std::size_t>(m),
                                    std::vector<Int>(static_cast<std::size_t>(m)));
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j + 1 < m; ++j) {
            if (i == j) A[i][j] = 1;
            else if (i > j) A[i][j] = p.dcol()[i - j - 1];
        }
        A[i][m - 1] = p.zcol()[i];
    }

    Int prev = 1;
    int sign = 1;
    for (long c = 0; c + 1 < m; ++c) {
        long piv = -1;
        for (long r = c; r < m; ++r)
            if (A[r][c] != 0) { piv = r; break; }
        if (piv < 0) return Int(0);
        if (piv != c) {
            std::swap(A[piv], A[c]);
            sign = -sign;
        }
        for (long r = c + 1; r < m; ++r) {
            for (long cc = c + 1; cc < m; ++cc) {
                Int t = A[c][c] * A[r][cc] - A[r][c] * A[c][cc];
                A[r][cc] = divide_exact(t, prev);
            }
            A[r][c] = 0;
        }
        prev = A[c][c];
    }
    Int det = A[m - 1][m - 1];
    if (sign < 0) det = -det;
    return det;
}

// The (n+1)-dimensional instance for plain p(n): band from the pentagonal
// coefficients of (q)_inf, final column (1, 0, ..., 0).
inline DetProblem build_eq1(long n) {
    if (n < 0) throw std::invalid_argument("build_eq1: n must be >= 0");
    const auto e = etaq(1, n);
    std::vector<Int> dcol(e.coeffs().begin() + 1, e.coeffs().end());
    std::vector<Int> zcol(static_cast<std::size_t>(n) + 1);
    zcol[0] = 1;
    return DetProblem(std::move(dcol), std::move(zcol));
}

// The (k+1)-dimensional instance for p(7k+a): band from (q)_inf^8, final
// column from Z^(a).
inline DetProblem build_mod7(long a, long k) {
    if (a < 0 || a > 6)
        throw std::invalid_argument("build_mod7: residue must be in 0..6");
    if (k < 0) throw std::invalid_argument("build_mod7: k must be >= 0");
    const auto e8 = pow(etaq(1, k), 8);
    std::vector<Int> dcol(e8.coeffs().begin() + 1, e8.coeffs().end());
    return DetProblem(std::move(dcol), z_series_7(a, k).coeffs());
}

}  // namespace qpart
