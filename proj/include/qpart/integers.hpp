#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qpart {

// Coefficient type for every series, polynomial and determinant in the
// library. GMP's mpz_class: exact, arbitrary precision, value semantics.
using Int = mpz_class;

// Decimal rendering, used by the JSON layer and the CLI so every integer
// crosses process boundaries as an exact string.
inline std::string to_decimal(const Int& v) { return v.get_str(); }

// Strict inverse of to_decimal: an optional leading '-' followed by digits.
// mpz_class's own string constructor accepts whitespace and other bases;
// serialized data should not.
inline Int parse_decimal(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return Int(s, 10);
}

// Exact quotient; throws when b does not divide a. Used by the
// fraction-free determinant eliminator, where inexactness would mean the
// algorithm's divisibility guarantee was violated.
inline Int divide_exact(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("divide_exact: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("divide_exact: remainder is nonzero");
    return q;
}

}  // namespace qpart
