// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "bounds.hpp"

#include <stdexcept>

namespace lrc::bounds {

namespace {
long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void check(const ParamTuple& p) {
    if (p.k < 1 || p.k > p.n || p.d < 0 || p.d > p.n || p.r < 1 || p.r > p.k || p.t < 1)
        throw std::invalid_argument("parameter tuple violates 1<=k<=n, 1<=d<=n, 1<=r<=k, t>=1");
}
}  // namespace

long long singleton_lrc(long long n, long long k, long long r) {
    return n - k + 1 - (ceil_div(k, r) - 1);
}

long long availability_bound_wz(long long n, long long k, long long r, long long t) {
    return n - k - ceil_div(t * (k - 1) + 1, t * (r - 1) + 1) + 2;
}

long long availability_bound_ta(long long n, long long k, long long r, long long t) {
    long long sum = 0, denom = 1;
    for (long long i = 0; i <= t; ++i) {
        sum += (k - 1) / denom;
        if (denom > k) break;  // remaining terms are zero
        denom *= r;
    }
    return n - sum;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::optimal: return "optimal";
        case Verdict::feasible: return "feasible";
        default: return "violates";
    }
}

BoundReport classify(const ParamTuple& params, bool all_symbol_locality) {
    check(params);
    BoundReport rep;
    rep.params = params;

    auto verdict_of = [&](long long max_d) {
        if (params.d > max_d) return Verdict::violates;
        return params.d == max_d ? Verdict::optimal : Verdict::feasible;
    };

    BoundEntry s;
    s.bound = "singleton-lrc";
    s.max_d = singleton_lrc(params.n, params.k, params.r);
    s.slack = s.max_d - params.d;
    s.verdict = verdict_of(s.max_d);
    rep.entries.push_back(s);
    rep.overall = s.verdict;

    if (params.t >= 2) {
        BoundEntry w;
        w.bound = "availability-wz";
        w.max_d = availability_bound_wz(params.n, params.k, params.r, params.t);
        w.slack = w.max_d - params.d;
        w.verdict = verdict_of(w.max_d);
        rep.entries.push_back(w);

        BoundEntry a;
        a.bound = "availability-ta";
        a.max_d = availability_bound_ta(params.n, params.k, params.r, params.t);
        a.slack = a.max_d - params.d;
        a.verdict = verdict_of(a.max_d);
        if (!all_symbol_locality)
            a.caveat = "advisory: requires all-symbol locality, which is unverified here";
        rep.entries.push_back(a);
    }
    return rep;
}

}  // namespace lrc::bounds
