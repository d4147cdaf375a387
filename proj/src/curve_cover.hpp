// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_CURVE_COVER_HPP
#define LRC_CURVE_COVER_HPP

#include <cstdint>
#include <vector>

#include "evalcode.hpp"
#include "recovery.hpp"

namespace lrc::curve_cover {

enum class HermitianForm {
    x_form,  // x^q + x = y^{q+1}
    y_form,  // y^q + y = x^{q+1}
};

// The Hermitian curve over GF(q^2): q^3 affine points, enumerated
// deterministically (sorted by (y, x) element codes).
struct HermitianCurve {
    std::uint32_t q = 0;
    gf::FieldPtr field;  // GF(q^2)
    HermitianForm form = HermitianForm::x_form;
    std::vector<std::pair<gf::elem, gf::elem>> affine_points;  // (x, y)
};

HermitianCurve hermitian_points(std::uint32_t q, HermitianForm form);

struct BuiltCode {
    evalcode::EvaluationCode code;
    recovery::RecoveryStructure structure;
};

// C(S, V_l) with V_l = <x^i y^j : 0 <= i <= q-2, 0 <= j <= l> on all q^3
// affine points of the X-form curve.  Locality q-1: each coordinate
// recovers from the other points sharing its y (Lagrange in x).
BuiltCode build_hermitian_lrc(std::uint32_t q, std::uint32_t l);

// Power-map cover on the Y-form curve: fibers of (x, y) -> (x^s, y) with
// s | q+1.  Evaluation set drops the degenerate x = 0 fiber, so
// n = q^3 - q.  Basis: x^a y^b with a <= q, a mod s <= s-2, b <= y_cap.
// Locality s-1 via Lagrange in x over the s fiber x-values.
BuiltCode build_power_cover_lrc(std::uint32_t q, std::uint32_t s, std::uint32_t y_cap);

}  // namespace lrc::curve_cover

#endif
