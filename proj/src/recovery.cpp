// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "recovery.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lrc::recovery {

std::size_t RecoveryStructure::locality() const {
    std::size_t r = 0;
    for (const auto& gs : groups)
        for (const auto& g : gs) r = std::max(r, g.support.size());
    return r;
}

std::size_t RecoveryStructure::disjoint_count(std::size_t coord) const {
    std::set<std::size_t> used;
    std::size_t count = 0;
    for (const auto& g : groups[coord]) {
        bool clash = false;
        for (auto s : g.support)
            if (used.count(s)) { clash = true; break; }
        if (clash) continue;
        used.insert(g.support.begin(), g.support.end());
        ++count;
    }
    return count;
}

std::size_t RecoveryStructure::availability() const {
    std::size_t t = SIZE_MAX;
    for (std::size_t i = 0; i < groups.size(); ++i) t = std::min(t, disjoint_count(i));
    return groups.empty() ? 0 : t;
}

CertificationReport certify(const evalcode::EvaluationCode& code, const RecoveryStructure& rs) {
    CertificationReport rep;
    const auto& F = *code.field;
    const auto& G = code.generator;
    if (rs.groups.size() != code.n()) {
        rep.failure = "structure size does not match code length";
        return rep;
    }
    for (std::size_t coord = 0; coord < rs.groups.size(); ++coord) {
        for (std::size_t gi = 0; gi < rs.groups[coord].size(); ++gi) {
            const auto& g = rs.groups[coord][gi];
            if (g.target >= code.n()) {
                rep.failure = "target index out of range";
                return rep;
            }
            for (auto s : g.support)
                if (s >= code.n()) {
                    rep.failure = "support index out of range";
                    return rep;
                }
            for (std::size_t row = 0; row < G.rows; ++row) {
                gf::elem acc = 0;
                for (std::size_t j = 0; j < g.support.size(); ++j)
                    acc = F.add(acc, F.mul(g.lambda[j], G.at(row, g.support[j])));
                if (acc != G.at(row, g.target)) {
                    std::ostringstream os;
                    os << "coordinate " << coord << " group " << gi
                       << ": column identity fails at basis row " << row;
                    rep.failure = os.str();
                    return rep;
                }
            }
            ++rep.groups_checked;
        }
    }
    rep.ok = true;
    rep.locality = rs.locality();
    rep.availability = rs.availability();
    return rep;
}

std::optional<std::vector<gf::elem>> derive_lambda(const evalcode::EvaluationCode& code,
                                                   std::size_t target,
                                                   const std::vector<std::size_t>& support) {
    const auto& F = *code.field;
    const auto& G = code.generator;
    // use only the encoding rows; dependent rows add no constraints
    matgf::Matrix A(code.k, support.size());
    std::vector<gf::elem> b(code.k);
    for (std::size_t r = 0; r < code.k; ++r) {
        const gf::elem* row = code.encoding_row(r);
        for (std::size_t j = 0; j < support.size(); ++j) A.at(r, j) = row[support[j]];
        b[r] = row[target];
    }
    (void)G;
    return matgf::solve(F, A, b);
}

std::pair<evalcode::ReceivedWord, RecoveryReport> recover(const evalcode::ReceivedWord& received,
                                                          const RecoveryStructure& rs,
                                                          GroupOrder order) {
    evalcode::ReceivedWord word = received;
    RecoveryReport rep;
    const auto& F = *rs.field;

    // per-coordinate group trial order
    std::vector<std::vector<std::size_t>> trial(rs.groups.size());
    for (std::size_t i = 0; i < rs.groups.size(); ++i) {
        trial[i].resize(rs.groups[i].size());
        for (std::size_t g = 0; g < trial[i].size(); ++g) trial[i][g] = g;
        if (order == GroupOrder::cheapest_first)
            std::stable_sort(trial[i].begin(), trial[i].end(), [&](std::size_t a, std::size_t b) {
                return rs.groups[i][a].support.size() < rs.groups[i][b].support.size();
            });
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < word.symbols.size(); ++i) {
            if (!word.erased(i)) continue;
            for (std::size_t gi : trial[i]) {
                const auto& g = rs.groups[i][gi];
                bool available = true;
                for (auto s : g.support)
                    if (word.erased(s)) { available = false; break; }
                if (!available) continue;
                gf::elem acc = 0;
                for (std::size_t j = 0; j < g.support.size(); ++j)
                    acc = F.add(acc, F.mul(g.lambda[j],
                                           static_cast<gf::elem>(word.symbols[g.support[j]])));
                word.symbols[i] = acc;
                rep.repaired.push_back({i, g.support});
                rep.bandwidth += g.support.size();
                progress = true;
                break;
            }
        }
    }
    for (std::size_t i = 0; i < word.symbols.size(); ++i)
        if (word.erased(i)) rep.residual.push_back(i);
    return {word, rep};
}

}  // namespace lrc::recovery
