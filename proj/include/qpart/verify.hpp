#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpart/series.hpp"

namespace qpart {

// One identity (or suite) checked to a truncation order. Failing entries
// carry the first offending index; passing entries carry nothing.
struct VerificationEntry {
    std::string name;
    long order = 0;
    bool pass = false;
    std::optional<long> first_mismatch;
};

struct VerificationReport {
    std::vector<VerificationEntry> entries;

    bool overall() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    void add(VerificationEntry e) { entries.push_back(std::move(e)); }
};

// Compare two series through their shared order and produce an entry.
template <typename I>
VerificationEntry compare_series(std::string name, const TruncatedSeries<I>& a,
                                 const TruncatedSeries<I>& b) {
    VerificationEntry e;
    e.name = std::move(name);
    e.order = detail::common_order(a, b);
    e.pass = true;
    for (long i = 0; i <= e.order; ++i) {
        if (a.coeffs()[i] != b.coeffs()[i]) {
            e.pass = false;
            e.first_mismatch = i;
            break;
        }
    }
    return e;
}

// Entry for a check that is a sequence of indexed facts rather than a
// series equality (oracle sweeps, determinant sweeps); `mismatch` is the
// first failing index, if any.
inline VerificationEntry indexed_entry(std::string name, long order,
                                       std::optional<long> mismatch) {
    VerificationEntry e;
    e.name = std::move(name);
    e.order = order;
    e.pass = !mismatch.has_value();
    e.first_mismatch = mismatch;
    return e;
}

}  // namespace qpart
