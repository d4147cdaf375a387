// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_BOUNDS_HPP
#define LRC_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

namespace lrc::bounds {

struct ParamTuple {
    long long n = 0, k = 0, d = 0, r = 0;
    long long t = 1;
    long long q = 0;  // informational only
};

// Singleton-type bound: max d with k + d <= n + 1 - (ceil(k/r) - 1).
long long singleton_lrc(long long n, long long k, long long r);

// Availability bound d <= n - k - ceil((t(k-1)+1)/(t(r-1)+1)) + 2.
long long availability_bound_wz(long long n, long long k, long long r, long long t);

// All-symbol-locality availability bound d <= n - sum_{i=0}^t floor((k-1)/r^i).
long long availability_bound_ta(long long n, long long k, long long r, long long t);

enum class Verdict { optimal, feasible, violates };

struct BoundEntry {
    std::string bound;     // "singleton-lrc" | "availability-wz" | "availability-ta"
    long long max_d = 0;
    long long slack = 0;   // max_d - actual d
    Verdict verdict = Verdict::feasible;
    std::string caveat;    // applicability notes, empty if none
};

struct BoundReport {
    ParamTuple params;
    std::vector<BoundEntry> entries;
    Verdict overall = Verdict::feasible;  // governed by the Singleton-type bound
};

// Evaluates the Singleton-type bound always and both availability bounds
// when t >= 2.  Eq-(3) entries carry an applicability caveat unless the
// caller vouches for all-symbol locality.
BoundReport classify(const ParamTuple& params, bool all_symbol_locality = true);

const char* verdict_name(Verdict v);

}  // namespace lrc::bounds

#endif
