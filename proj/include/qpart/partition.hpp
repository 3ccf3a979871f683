#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpart/integers.hpp"

namespace qpart {

// Ground-truth table of partition numbers p(0..limit). Everything else in
// the repository is ultimately checked against one of these tables, so
// they are produced by two unrelated algorithms that must agree.
struct PartitionTable {
    std::vector<Int> values;  // values[n] = p(n)

    long limit() const { return static_cast<long>(values.size()) - 1; }

    const Int& p(long n) const {
        if (n < 0 || n > limit())
            throw std::out_of_range("p(" + std::to_string(n) +
                                    ") outside table limit " + std::to_string(limit()));
        return values[static_cast<std::size_t>(n)];
    }
};

// Cap for the quadratic oracle below, overridable via QPART_ORACLE_CAP.
// The cap exists because the bounded-parts count is O(limit^2) big-integer
// additions; past a couple thousand it stops being a quick check.
inline long oracle_cap() {
    if (const char* env = std::getenv("QPART_ORACLE_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return v;
    }
    return 2000;
}

// Euler's pentagonal recurrence:
//   p(n) = sum_{j>=1} (-1)^(j+1) [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ].
// O(n^1.5) additions; the fast path for every n used here.
inline PartitionTable p_euler(long limit) {
    if (limit < 0) throw std::invalid_argument("p_euler: limit must be >= 0");
    PartitionTable t;
    t.values.resize(static_cast<std::size_t>(limit) + 1);
    t.values[0] = 1;
    for (long n = 1; n <= limit; ++n) {
        Int acc = 0;
        for (long j = 1; j * (3 * j - 1) / 2 <= n; ++j) {
            const long g1 = j * (3 * j - 1) / 2;
            const long g2 = j * (3 * j + 1) / 2;
            if (j % 2 != 0) {
                acc += t.values[n - g1];
                if (g2 <= n) acc += t.values[n - g2];
            } else {
                acc -= t.values[n - g1];
                if (g2 <= n) acc -= t.values[n - g2];
            }
        }
        t.values[n] = std::move(acc);
    }
    return t;
}

// Independent oracle: bounded-parts dynamic programming (the coin-counting
// table), one new part size per outer pass. No pentagonal numbers, no
// generating functions; deliberately the dumbest exact method available.
inline PartitionTable p_bruteforce(long limit, long cap = oracle_cap()) {
    if (limit < 0) throw std::invalid_argument("p_bruteforce: limit must be >= 0");
    if (limit > cap)
        throw std::invalid_argument("p_bruteforce: limit " + std::to_string(limit) +
                                    " exceeds cap " + std::to_string(cap) +
                                    " (set QPART_ORACLE_CAP to raise)");
    std::vector<Int> ways(static_cast<std::size_t>(limit) + 1);
    ways[0] = 1;
    for (long part = 1; part <= limit; ++part)
        for (long n = part; n <= limit; ++n)
            ways[n] += ways[n - part];
    PartitionTable t;
    t.values = std::move(ways);
    return t;
}

}  // namespace qpart
