// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bounds.hpp"

using namespace lrc::bounds;

TEST_CASE("Singleton-type bound fixtures") {
    CHECK(singleton_lrc(12, 6, 2) == 5);
    CHECK(singleton_lrc(18, 11, 2) == 3);
    CHECK(singleton_lrc(24, 17, 3) == 3);
    CHECK(singleton_lrc(48, 31, 2) == 3);
    CHECK(singleton_lrc(110, 87, 4) == 3);
}

TEST_CASE("r = k collapses to the classical Singleton bound, n <= 100 sweep") {
    for (long long n = 1; n <= 100; ++n)
        for (long long k = 1; k <= n; ++k) CHECK(singleton_lrc(n, k, k) == n - k + 1);
}

TEST_CASE("availability bound (Wang-Zhang form) fixtures") {
    CHECK(availability_bound_wz(12, 6, 2, 2) == 4);
    // k = 1 collapses to d <= n
    for (long long t = 1; t <= 4; ++t)
        for (long long r = 1; r <= 5; ++r) CHECK(availability_bound_wz(20, 1, r, t) == 20);
}

TEST_CASE("t = 1 availability bound vs Singleton-type bound on a sweep") {
    // recorded relationship: the t=1 form never exceeds the Singleton-type bound and matches
    // it whenever ceil((k-1+1)/(r-1+1)) == ceil(k/r)
    for (long long n = 2; n <= 50; ++n)
        for (long long k = 1; k < n; ++k)
            for (long long r = 1; r <= k; ++r) {
                long long wz = availability_bound_wz(n, k, r, 1);
                long long si = singleton_lrc(n, k, r);
                CHECK(wz <= si);
                long long lhs = (k + r - 1) / r;  // ceil(k/r)
                long long rhs = (k - 1 + 1 + (r - 1)) / r;
                if (lhs == rhs) CHECK(wz == si);
            }
}

TEST_CASE("all-symbol availability bound fixtures") {
    // 12 - (floor(5/1) + floor(5/2) + floor(5/4)) = 12 - 8 = 4
    CHECK(availability_bound_ta(12, 6, 2, 2) == 4);
    // t = 0 is Singleton
    for (long long n = 2; n <= 30; ++n)
        for (long long k = 1; k < n; ++k) CHECK(availability_bound_ta(n, k, 3, 0) == n - k + 1);
}

TEST_CASE("the all-symbol bound is monotone: tighter in t, looser in r") {
    for (long long n = 4; n <= 40; ++n)
        for (long long k = 2; k < n; ++k)
            for (long long r = 2; r <= k; ++r)
                for (long long t = 1; t <= 5; ++t) {
                    CHECK(availability_bound_ta(n, k, r, t + 1) <=
                          availability_bound_ta(n, k, r, t));
                    CHECK(availability_bound_ta(n, k, r, t) <=
                          availability_bound_ta(n, k, r + 1, t));
                }
}

TEST_CASE("classify marks the worked [12,6,5] code optimal") {
    BoundReport rep = classify({12, 6, 5, 2, 1, 13});
    CHECK(rep.overall == Verdict::optimal);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].bound == "singleton-lrc");
    CHECK(rep.entries[0].slack == 0);
}

TEST_CASE("classify flags one-past-optimal as violating") {
    CHECK(classify({12, 6, 6, 2, 1, 13}).overall == Verdict::violates);
    CHECK(classify({12, 6, 4, 2, 1, 13}).overall == Verdict::feasible);
}

TEST_CASE("classify verdicts are monotone in d") {
    bool seen_violation = false;
    for (long long d = 1; d <= 12; ++d) {
        auto v = classify({12, 6, d, 2, 1, 13}).overall;
        if (seen_violation) CHECK(v == Verdict::violates);
        if (v == Verdict::violates) seen_violation = true;
    }
    CHECK(seen_violation);
}

TEST_CASE("surface-code table rows all classify as optimal") {
    const long long rows[4][5] = {
        {4, 18, 11, 3, 2}, {5, 24, 17, 3, 3}, {7, 48, 31, 3, 2}, {11, 110, 87, 3, 4}};
    for (const auto& row : rows) {
        BoundReport rep = classify({row[1], row[2], row[3], row[4], 1, row[0]});
        CHECK(rep.overall == Verdict::optimal);
    }
}

TEST_CASE("availability bounds appear only for t >= 2, with caveat handling") {
    auto rep1 = classify({12, 6, 2, 2, 1, 13});
    CHECK(rep1.entries.size() == 1);
    auto rep2 = classify({12, 6, 2, 2, 2, 13});
    REQUIRE(rep2.entries.size() == 3);
    CHECK(rep2.entries[1].bound == "availability-wz");
    CHECK(rep2.entries[2].bound == "availability-ta");
    CHECK(rep2.entries[2].caveat.empty());  // all-symbol locality vouched by default
    auto rep3 = classify({12, 6, 2, 2, 2, 13}, false);
    CHECK(!rep3.entries[2].caveat.empty());
}

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_name(Verdict::optimal)) == "optimal");
    CHECK(std::string(verdict_name(Verdict::feasible)) == "feasible");
    CHECK(std::string(verdict_name(Verdict::violates)) == "violates");
}
