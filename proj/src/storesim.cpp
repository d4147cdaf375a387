// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "storesim.hpp"

#include <algorithm>
#include <random>

namespace lrc::storesim {

namespace {

// splitmix64 finalizer: raw seed ^ trial collides across nearby seeds
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::size_t degraded_read(const recovery::RecoveryStructure& rs, std::size_t hot_coordinate,
                          const std::vector<bool>& failed) {
    std::size_t served = failed[hot_coordinate] ? 0 : 1;
    std::vector<bool> used(failed.size(), false);
    for (const auto& g : rs.groups[hot_coordinate]) {
        bool ok = true;
        for (std::size_t s : g.support)
            if (failed[s] || used[s]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (std::size_t s : g.support) used[s] = true;
        ++served;
    }
    return served;
}

SimReport simulate(const evalcode::EvaluationCode& code, const recovery::RecoveryStructure& rs,
                   const ClusterModel& model, std::uint64_t trials) {
    auto cert = recovery::certify(code, rs);
    if (!cert.ok)
        throw gf::field_error("recovery structure failed certification: " + cert.failure);
    if (model.iid_p.has_value() == model.explicit_failures.has_value())
        throw gf::field_error("cluster model needs exactly one of iid_p / explicit failures");
    if (model.iid_p && (*model.iid_p < 0.0 || *model.iid_p > 1.0))
        throw gf::field_error("failure probability out of [0, 1]");

    const std::size_t n = code.n();
    if (model.explicit_failures)
        for (std::size_t i : *model.explicit_failures)
            if (i >= n) throw gf::field_error("explicit failure index out of range");

    SimReport rep;
    rep.trials = trials;
    std::uint64_t bandwidth_total = 0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<bool> failed(n, false);
        if (model.iid_p) {
            std::mt19937_64 rng(mix(mix(model.seed) ^ t));
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (std::size_t i = 0; i < n; ++i) failed[i] = u(rng) < *model.iid_p;
        } else {
            for (std::size_t i : *model.explicit_failures) failed[i] = true;
        }

        evalcode::ReceivedWord word;  // only the erasure pattern matters here
        word.symbols.assign(n, 0);
        std::size_t failed_count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (failed[i]) {
                word.symbols[i] = evalcode::ReceivedWord::kErased;
                ++failed_count;
            }
        rep.failed_total += failed_count;

        auto [fixed, rrep] = recovery::recover(word, rs);
        rep.repaired_total += rrep.repaired.size();
        bandwidth_total += rrep.bandwidth;
        for (const auto& r : rrep.repaired)
            rep.max_repair_bandwidth = std::max(rep.max_repair_bandwidth, r.support_used.size());

        for (std::size_t i = 0; i < n; ++i)
            ++rep.parallel_capacity_histogram[degraded_read(rs, i, failed)];
    }

    if (rep.failed_total > 0) {
        rep.locally_repaired_fraction =
            static_cast<double>(rep.repaired_total) / static_cast<double>(rep.failed_total);
        rep.residual_failure_rate =
            static_cast<double>(rep.failed_total - rep.repaired_total) /
            static_cast<double>(rep.failed_total);
    }
    if (rep.repaired_total > 0)
        rep.mean_repair_bandwidth =
            static_cast<double>(bandwidth_total) / static_cast<double>(rep.repaired_total);
    return rep;
}

}  // namespace lrc::storesim
