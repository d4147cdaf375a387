// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_EVALCODE_HPP
#define LRC_EVALCODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf.hpp"
#include "matgf.hpp"
#include "poly.hpp"

namespace lrc::evalcode {

// Point on the evaluation set: 1, 2 or 3 field coordinates depending on
// the construction, plus its stable index in D.
struct EvaluationPoint {
    std::vector<gf::elem> coords;
    std::size_t index = 0;
};

// Basis function of the form  prod_i coord_i^exps[i]  *  g(coord_0)^gpow.
// Monomial bases leave g unset.  Tamo-Barg bases use exps = {i}, gpow = j.
struct BasisElem {
    std::vector<std::uint32_t> exps;
    std::optional<poly::UniPoly> g;
    std::uint32_t gpow = 0;

    gf::elem eval(const gf::Field& F, const std::vector<gf::elem>& coords) const;
    std::string name(const std::vector<std::string>& vars) const;
};

enum class DistanceProvenance { formula, brute_force, reported_unverified, unknown };

const char* provenance_name(DistanceProvenance p);

struct EvaluationCode {
    gf::FieldPtr field;
    std::vector<EvaluationPoint> points;
    std::vector<BasisElem> basis;
    std::vector<std::string> var_names;
    matgf::Matrix generator;                    // |basis| x n, filled exactly
    std::size_t k = 0;                          // rank of generator
    std::vector<std::size_t> encoding_rows;     // first k independent rows
    std::optional<int> design_distance;
    DistanceProvenance distance_provenance = DistanceProvenance::unknown;

    std::size_t n() const { return points.size(); }
    // Row r of the generator restricted to the encoding basis.
    const gf::elem* encoding_row(std::size_t r) const {
        return generator.row(encoding_rows[r]);
    }
};

// Evaluates every basis function at every point and computes the rank.
// Dependent basis rows are kept; encoding uses the first rank-k
// independent rows in basis order.  With compute_rank = false the basis is
// taken as independent (k = |basis|) and elimination is skipped; callers
// use this for large bases whose independence is known structurally.
EvaluationCode build_code(gf::FieldPtr field, std::vector<EvaluationPoint> points,
                          std::vector<BasisElem> basis,
                          std::vector<std::string> var_names = {"x"},
                          bool compute_rank = true);

std::vector<gf::elem> encode(const EvaluationCode& code, const std::vector<gf::elem>& message);

// Solves for a message whose codeword equals `word`; nullopt when the word
// is not in the code.
std::optional<std::vector<gf::elem>> solve_message(const EvaluationCode& code,
                                                   const std::vector<gf::elem>& word);

// Exact minimum distance by scanning one representative per scalar class
// ((q^k - 1)/(q - 1) codewords).  Returns nullopt (REFUSED) when the class
// count exceeds work_budget.
std::optional<int> min_distance_bruteforce(const EvaluationCode& code, std::uint64_t work_budget);

// Length-n word with erasures.
struct ReceivedWord {
    static constexpr std::int64_t kErased = -1;
    std::vector<std::int64_t> symbols;  // element code or kErased

    bool erased(std::size_t i) const { return symbols[i] == kErased; }
    std::size_t erasure_count() const;
};

}  // namespace lrc::evalcode

#endif
