// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_RECOVERY_HPP
#define LRC_RECOVERY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evalcode.hpp"

namespace lrc::recovery {

// Linear repair group: c_target = sum_j lambda[j] * c_support[j] for every
// codeword c.
struct RepairGroup {
    std::size_t target = 0;
    std::vector<std::size_t> support;
    std::vector<gf::elem> lambda;
};

struct RecoveryStructure {
    gf::FieldPtr field;
    std::vector<std::vector<RepairGroup>> groups;  // per coordinate
    std::size_t locality() const;                  // max support size
    // Availability = min over coordinates of the number of pairwise-disjoint
    // groups.  Groups produced by the constructions here are already
    // pairwise disjoint per coordinate; this counts a greedy disjoint family.
    std::size_t availability() const;
    std::size_t disjoint_count(std::size_t coord) const;
};

struct CertificationReport {
    bool ok = false;
    std::size_t locality = 0;
    std::size_t availability = 0;
    std::size_t groups_checked = 0;
    std::string failure;  // first violating group, when !ok
};

// Checks the exact generator-column identity for every group; passing
// implies the recovery identity for all codewords.
CertificationReport certify(const evalcode::EvaluationCode& code, const RecoveryStructure& rs);

// Solves column_target = sum lambda_j column_j over the field; nullopt when
// the support is not a valid recovery set.
std::optional<std::vector<gf::elem>> derive_lambda(const evalcode::EvaluationCode& code,
                                                   std::size_t target,
                                                   const std::vector<std::size_t>& support);

enum class GroupOrder { cheapest_first, declared };

struct RecoveryReport {
    struct Repair {
        std::size_t coordinate;
        std::vector<std::size_t> support_used;
    };
    std::vector<Repair> repaired;
    std::size_t bandwidth = 0;  // symbols read across all repairs
    std::vector<std::size_t> residual;
};

// Peeling: repeatedly repair any erased coordinate that has a group with
// fully-available support, until fixpoint.  Residual erasures are reported,
// not thrown.
std::pair<evalcode::ReceivedWord, RecoveryReport> recover(
    const evalcode::ReceivedWord& received, const RecoveryStructure& rs,
    GroupOrder order = GroupOrder::cheapest_first);

}  // namespace lrc::recovery

#endif
