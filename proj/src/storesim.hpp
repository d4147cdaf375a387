// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_STORESIM_HPP
#define LRC_STORESIM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "evalcode.hpp"
#include "recovery.hpp"

namespace lrc::storesim {

// One coordinate per storage node.  Failures are either i.i.d. with
// probability p per node per trial, or an explicit failure set applied to
// every trial.  Identical (model, seed) gives an identical trajectory.
struct ClusterModel {
    std::optional<double> iid_p;                       // exactly one of the two is set
    std::optional<std::vector<std::size_t>> explicit_failures;
    std::uint64_t seed = 0;
};

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t failed_total = 0;
    std::uint64_t repaired_total = 0;
    double locally_repaired_fraction = 1.0;  // repaired / failed; 1 when nothing failed
    double mean_repair_bandwidth = 0.0;      // symbols read per repaired coordinate
    std::size_t max_repair_bandwidth = 0;
    // parallel-read capacity per coordinate (1 + disjoint available groups),
    // sampled across trials and coordinates
    std::map<std::size_t, std::uint64_t> parallel_capacity_histogram;
    double residual_failure_rate = 0.0;      // unrepaired / failed
};

// Runs `trials` independent failure trials with peeling recovery.  Trial i
// uses seed ^ i, so parallel execution would be reproducible.  Throws when
// the structure does not certify against the code.
SimReport simulate(const evalcode::EvaluationCode& code, const recovery::RecoveryStructure& rs,
                   const ClusterModel& model, std::uint64_t trials);

// Concurrent readers served for one hot coordinate: 1 (direct, when alive)
// plus the greedy count of pairwise-disjoint fully-available groups.
std::size_t degraded_read(const recovery::RecoveryStructure& rs, std::size_t hot_coordinate,
                          const std::vector<bool>& failed);

}  // namespace lrc::storesim

#endif
