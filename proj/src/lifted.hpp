// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_LIFTED_HPP
#define LRC_LIFTED_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "curve_cover.hpp"
#include "evalcode.hpp"
#include "poly.hpp"
#include "recovery.hpp"

namespace lrc::lifted {

// Which curve the lifting runs over.
enum class CurveKind {
    hermitian,    // y^q + y = x^{q+1} over GF(q^2); delta = q-1, deg m = q+1
    norm_trace2,  // Tr(y) = x^{2^r - 1} over GF(2^r); deg m = 2^r - 1
};

// Line family x = t, y = alpha*t + beta.  The defining good-monomial scan
// runs over the non-horizontal lines (alpha != 0); alpha, beta range over
// the full evaluation field.
struct LineFamily {
    CurveKind kind;
    std::uint32_t q_or_r;  // q for Hermitian, r for norm-trace
    gf::FieldPtr field;
};

LineFamily hermitian_lines(std::uint32_t q);
LineFamily norm_trace_lines(std::uint32_t r);

// Reduction modulus m_{alpha,beta}(t): vanishing polynomial of the
// t-parameters of line/curve intersections.
poly::UniPoly line_modulus(const LineFamily& lines, gf::elem alpha, gf::elem beta);

// deg( t^a (alpha t + beta)^b mod m_{alpha,beta} ); -1 for the zero remainder.
int line_degree(const LineFamily& lines, std::uint32_t a, std::uint32_t b, gf::elem alpha,
                gf::elem beta);

// Brute-force goodness oracle: reduction degree <= delta on every line.
bool monomial_is_good(const LineFamily& lines, std::uint32_t a, std::uint32_t b,
                      std::uint32_t delta);

struct GoodMonomial {
    std::uint32_t a = 0, b = 0;
    bool sporadic = false;  // a + b > delta yet good on every line
};

struct GoodMonomialSet {
    std::uint32_t delta = 0;
    std::uint32_t a_cap = 0, b_cap = 0;
    std::vector<GoodMonomial> monomials;
    std::size_t baseline_count() const;
    std::size_t sporadic_count() const;
};

// Exhaustive scan over a <= a_cap, b <= b_cap using an incremental
// all-lines reduction (one pass per line, shared power chains).
GoodMonomialSet good_monomials(const LineFamily& lines, std::uint32_t delta);

// Conservative fast filter: `good` verdicts are definitive (a monomial of
// total degree <= delta never needs reduction), `unknown` defers to the
// oracle.  Validated against the oracle in the test suite.
enum class FilterVerdict { good, unknown };
FilterVerdict fast_filter(std::uint32_t a, std::uint32_t b, std::uint32_t delta);

struct LiftedCode {
    evalcode::EvaluationCode code;
    recovery::RecoveryStructure structure;
    GoodMonomialSet monomials;
    std::uint32_t delta = 0;
    std::size_t realized_locality = 0;
    std::size_t realized_availability = 0;
};

// Hermitian-lifted code: n = q^3, locality q, availability q^2 - 1; one
// repair group per secant line through each point (the horizontal secant
// replaces the tangent, which meets the curve only once).
LiftedCode build_hermitian_lifted(std::uint32_t q);

// Binary norm-trace curve points over GF(2^r), count 2^{2r-1}.
struct NormTraceCurve {
    std::uint32_t r = 0;
    gf::FieldPtr field;
    std::vector<std::pair<gf::elem, gf::elem>> affine_points;  // (x, y), sorted by (y, x)
};
NormTraceCurve norm_trace_curve(std::uint32_t r);

enum class DeltaConvention {
    literal,                 // delta = 2^{r-1} - 2
    interpolation_consistent // delta = 2^{r-1} - 3
};

// Norm-trace lifted code; repair groups come from lines with at least
// delta + 1 surviving intersection points.
LiftedCode build_nt_lifted(std::uint32_t r, DeltaConvention convention);

// Distinct line/curve intersection counts |L ∩ X| for every non-horizontal
// line, via root counting of m_{alpha,beta}.
std::vector<std::size_t> line_intersection_counts(const LineFamily& lines);

}  // namespace lrc::lifted

#endif
