// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_TAMO_BARG_HPP
#define LRC_TAMO_BARG_HPP

#include <optional>
#include <string>
#include <vector>

#include "evalcode.hpp"
#include "poly.hpp"
#include "recovery.hpp"

namespace lrc::tamo_barg {

// Degree-(r+1) polynomial constant on every part of a partition of the
// evaluation domain into parts of size r+1.
struct GoodPolynomial {
    poly::UniPoly g;
    std::vector<std::vector<gf::elem>> partition;  // parts, each sorted, pairwise disjoint
    std::uint32_t r = 0;
};

// g = x^{r+1}, domain F_q^*, partition = cosets of the order-(r+1)
// multiplicative subgroup.  Requires (r+1) | (q-1).
GoodPolynomial good_from_multiplicative(gf::FieldPtr f, std::uint32_t r);

// g = prod_{a in H}(x - a) for the additive subgroup H spanned by the
// generators; domain F_q, partition = additive cosets of H.
GoodPolynomial good_from_additive(gf::FieldPtr f, const std::vector<gf::elem>& subgroup_generators);

struct GoodCheck {
    bool ok = false;
    std::string witness;  // violating pair / size / disjointness detail
};
GoodCheck verify_good(const poly::UniPoly& g, const std::vector<std::vector<gf::elem>>& partition);

struct TamoBargCode {
    evalcode::EvaluationCode code;
    recovery::RecoveryStructure structure;
    GoodPolynomial good;
    std::uint32_t k = 0;
    int design_distance = 0;  // n - k - k/r + 2
};

// C_k(g) with basis {g^j x^i : 0 <= j <= k/r - 1, 0 <= i <= r - 1} and one
// repair group per coordinate (the other r members of its part, with
// Lagrange coefficients precomputed).  Requires r | k and k/r <= #parts.
TamoBargCode build_tb(const GoodPolynomial& good, std::uint32_t k);

}  // namespace lrc::tamo_barg

#endif
