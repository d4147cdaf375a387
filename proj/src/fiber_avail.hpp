// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_FIBER_AVAIL_HPP
#define LRC_FIBER_AVAIL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "evalcode.hpp"
#include "recovery.hpp"

namespace lrc::fiber_avail {

// Generalized Giulietti-Korchmaros curve over GF(q^{2N}):
//   x^q + x = y^{q+1}   and   y^{q^2} - y = z^s,   s = (q^N + 1)/(q + 1).
struct GKCurve {
    std::uint32_t q = 0, N = 0;
    std::uint32_t s = 0;
    gf::FieldPtr field;  // GF(q^{2N})
    std::vector<std::array<gf::elem, 3>> affine_points;     // all (x, y, z)
    std::vector<std::array<gf::elem, 3>> evaluation_points; // z != 0, sorted by (y, x, z)
    std::size_t z_zero_count = 0;
    // q^{2N+2} - q^{N+3} + q^{N+2} + 1 (projective count from the
    // point-count formula; affine total is one less)
    std::uint64_t formula_point_count = 0;
};

GKCurve gk_points(std::uint32_t q, std::uint32_t N);

struct GKCode {
    evalcode::EvaluationCode code;
    recovery::RecoveryStructure structure;  // two disjoint groups per coordinate
    std::uint32_t l = 0;
    std::size_t k_structural = 0;  // (q-1)(s-1)(l+1)
};

// Basis x^i z^j y^kappa with i <= q-2, j <= s-2, kappa <= l.  Each
// coordinate gets a z-fiber group (size s-1, Lagrange in z) and a
// disjoint x-fiber group (size q-1, Lagrange in x).
// compute_rank controls whether the generator rank is verified (full
// elimination); the structural k is reported either way.
GKCode build_gk_lrc(std::uint32_t q, std::uint32_t N, std::uint32_t l, bool compute_rank = true);

}  // namespace lrc::fiber_avail

#endif
