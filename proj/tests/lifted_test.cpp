// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lifted.hpp"
#include "recovery.hpp"

using namespace lrc;

TEST_CASE("line modulus vanishes exactly on the line/curve intersections") {
    auto lines = lifted::hermitian_lines(4);
    const auto& F = *lines.field;
    auto curve = curve_cover::hermitian_points(4, curve_cover::HermitianForm::y_form);
    std::set<std::pair<gf::elem, gf::elem>> on_curve(curve.affine_points.begin(),
                                                     curve.affine_points.end());
    for (gf::elem alpha = 1; alpha < F.q(); alpha += 5)
        for (gf::elem beta = 0; beta < F.q(); beta += 3) {
            auto m = lifted::line_modulus(lines, alpha, beta);
            CHECK(m.degree() == 5);  // q + 1
            for (gf::elem t = 0; t < F.q(); ++t) {
                bool root = m.eval(t) == 0;
                bool on = on_curve.count({t, F.add(F.mul(alpha, t), beta)}) > 0;
                CHECK(root == on);
            }
        }
}

TEST_CASE("norm-trace modulus is the sparse trace binomial sum") {
    auto lines = lifted::norm_trace_lines(4);
    const auto& F = *lines.field;
    for (gf::elem alpha = 1; alpha < 16; alpha += 3)
        for (gf::elem beta = 0; beta < 16; beta += 5) {
            auto m = lifted::line_modulus(lines, alpha, beta);
            CHECK(m.degree() == 15);  // 2^r - 1
            // m(t) = Tr(alpha t + beta) + t^15, checked value-wise
            for (gf::elem t = 0; t < 16; ++t) {
                gf::elem lhs = m.eval(t);
                gf::elem rhs = F.add(F.trace(F.add(F.mul(alpha, t), beta), 1), F.pow(t, 15));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("the worked sporadic monomial a=8, b=2 is good at q=4") {
    auto lines = lifted::hermitian_lines(4);
    CHECK(lifted::monomial_is_good(lines, 8, 2, 3));
    CHECK(lifted::line_degree(lines, 8, 2, 1, 1) <= 3);
    // x^4 y^0 is not good: degree 4 > 3 on some line
    CHECK(!lifted::monomial_is_good(lines, 4, 0, 3));
}

TEST_CASE("incremental scan equals the brute-force oracle at q=4") {
    auto lines = lifted::hermitian_lines(4);
    auto set = lifted::good_monomials(lines, 3);
    CHECK(set.a_cap == 4);
    CHECK(set.b_cap == 15);
    std::set<std::pair<std::uint32_t, std::uint32_t>> scanned;
    for (const auto& m : set.monomials) scanned.insert({m.a, m.b});
    for (std::uint32_t a = 0; a <= set.a_cap; ++a)
        for (std::uint32_t b = 0; b <= set.b_cap; ++b)
            CHECK(scanned.count({a, b}) ==
                  (lifted::monomial_is_good(lines, a, b, 3) ? 1u : 0u));
}

TEST_CASE("incremental scan equals the oracle for norm-trace r=3") {
    auto lines = lifted::norm_trace_lines(3);
    for (std::uint32_t delta : {1u, 2u}) {
        auto set = lifted::good_monomials(lines, delta);
        std::set<std::pair<std::uint32_t, std::uint32_t>> scanned;
        for (const auto& m : set.monomials) scanned.insert({m.a, m.b});
        for (std::uint32_t a = 0; a <= set.a_cap; ++a)
            for (std::uint32_t b = 0; b <= set.b_cap; ++b)
                CHECK(scanned.count({a, b}) ==
                      (lifted::monomial_is_good(lines, a, b, delta) ? 1u : 0u));
    }
}

TEST_CASE("fast filter accepts only monomials the oracle accepts") {
    auto lines = lifted::hermitian_lines(4);
    std::size_t accepted = 0;
    for (std::uint32_t a = 0; a <= 4; ++a)
        for (std::uint32_t b = 0; b <= 15; ++b) {
            if (lifted::fast_filter(a, b, 3) == lifted::FilterVerdict::good) {
                CHECK(lifted::monomial_is_good(lines, a, b, 3));
                ++accepted;
            }
        }
    CHECK(accepted > 0);
}

TEST_CASE("sporadic classification marks exactly the over-degree survivors") {
    auto lines = lifted::hermitian_lines(4);
    auto set = lifted::good_monomials(lines, 3);
    for (const auto& m : set.monomials) CHECK(m.sporadic == (m.a + m.b > 3));
    CHECK(set.baseline_count() + set.sporadic_count() == set.monomials.size());
    CHECK(set.baseline_count() == 10);  // C(delta+2, 2) monomials of total degree <= 3
}

TEST_CASE("Hermitian-lifted q=4: locality 4, availability 15, all coordinates") {
    auto lc = lifted::build_hermitian_lifted(4);
    CHECK(lc.code.n() == 64);
    CHECK(lc.code.k == 13);  // frozen rank of the good-monomial generator
    CHECK(lc.realized_locality == 4);
    CHECK(lc.realized_availability == 15);
    for (const auto& gs : lc.structure.groups) CHECK(gs.size() == 15);
    auto cert = recovery::certify(lc.code, lc.structure);
    CHECK(cert.ok);
    CHECK(cert.availability == 15);
}

TEST_CASE("lifted groups are pairwise disjoint per coordinate") {
    auto lc = lifted::build_hermitian_lifted(4);
    for (const auto& gs : lc.structure.groups) {
        std::set<std::size_t> all;
        for (const auto& g : gs)
            for (std::size_t s : g.support) CHECK(all.insert(s).second);
    }
}

TEST_CASE("norm-trace curve has 2^(2r-1) points on the curve") {
    for (std::uint32_t r : {3u, 4u, 5u}) {
        auto curve = lifted::norm_trace_curve(r);
        CHECK(curve.affine_points.size() == (1u << (2 * r - 1)));
        const auto& F = *curve.field;
        for (auto [x, y] : curve.affine_points)
            CHECK(F.trace(y, 1) == F.pow(x, (1u << r) - 1));
    }
}

TEST_CASE("all non-horizontal lines meet the r=4 curve in 7 or 9 points") {
    auto lines = lifted::norm_trace_lines(4);
    auto counts = lifted::line_intersection_counts(lines);
    CHECK(counts.size() == 240);  // 15 slopes x 16 intercepts
    std::map<std::size_t, int> hist;
    for (auto c : counts) ++hist[c];
    CHECK(hist.size() == 2);
    CHECK(hist[7] == 120);
    CHECK(hist[9] == 120);
}

TEST_CASE("norm-trace lifted r=3 certifies under both conventions") {
    for (auto conv : {lifted::DeltaConvention::literal,
                      lifted::DeltaConvention::interpolation_consistent}) {
        auto lc = lifted::build_nt_lifted(3, conv);
        CHECK(lc.code.n() == 32);
        CHECK(recovery::certify(lc.code, lc.structure).ok);
        CHECK(lc.realized_locality == lc.delta + 1);
    }
}

TEST_CASE("norm-trace lifted r=4 parameters under the two conventions") {
    auto lit = lifted::build_nt_lifted(4, lifted::DeltaConvention::literal);
    CHECK(lit.delta == 6);
    CHECK(lit.realized_locality == 7);
    auto ic = lifted::build_nt_lifted(4, lifted::DeltaConvention::interpolation_consistent);
    CHECK(ic.delta == 5);
    CHECK(ic.realized_locality == 6);
    CHECK(ic.realized_availability == 15);  // every non-horizontal line qualifies
    CHECK(recovery::certify(ic.code, ic.structure).ok);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(lifted::build_hermitian_lifted(3), gf::field_error);   // not a power of 2
    CHECK_THROWS_AS(lifted::build_hermitian_lifted(2), gf::field_error);   // q >= 4
    CHECK_THROWS_AS(lifted::build_nt_lifted(2, lifted::DeltaConvention::literal),
                    gf::field_error);
    CHECK_THROWS_AS(lifted::build_nt_lifted(7, lifted::DeltaConvention::literal),
                    gf::field_error);
}
