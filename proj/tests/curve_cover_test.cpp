// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "curve_cover.hpp"
#include "recovery.hpp"

using namespace lrc;

TEST_CASE("Hermitian point counts are q^3 and satisfy the defining equation") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        for (auto form : {curve_cover::HermitianForm::x_form, curve_cover::HermitianForm::y_form}) {
            auto curve = curve_cover::hermitian_points(q, form);
            const auto& F = *curve.field;
            CHECK(curve.affine_points.size() == static_cast<std::size_t>(q) * q * q);
            std::set<std::pair<gf::elem, gf::elem>> uniq;
            for (auto [x, y] : curve.affine_points) {
                uniq.insert({x, y});
                if (form == curve_cover::HermitianForm::x_form)
                    CHECK(F.add(F.pow(x, q), x) == F.pow(y, q + 1));
                else
                    CHECK(F.add(F.pow(y, q), y) == F.pow(x, q + 1));
            }
            CHECK(uniq.size() == curve.affine_points.size());
        }
    }
}

TEST_CASE("point enumeration is deterministic and (y, x)-sorted") {
    auto a = curve_cover::hermitian_points(3, curve_cover::HermitianForm::x_form);
    auto b = curve_cover::hermitian_points(3, curve_cover::HermitianForm::x_form);
    CHECK(a.affine_points == b.affine_points);
    for (std::size_t i = 1; i < a.affine_points.size(); ++i) {
        auto [x0, y0] = a.affine_points[i - 1];
        auto [x1, y1] = a.affine_points[i];
        CHECK(std::make_pair(y0, x0) < std::make_pair(y1, x1));
    }
}

TEST_CASE("q=3, l=2 code has n=27, k=6, locality 2") {
    auto built = curve_cover::build_hermitian_lrc(3, 2);
    CHECK(built.code.n() == 27);
    CHECK(built.code.k == 6);
    CHECK(built.structure.locality() == 2);
    auto cert = recovery::certify(built.code, built.structure);
    CHECK(cert.ok);
    CHECK(cert.locality == 2);
    // y-fibers partition the points into 9 groups of 3
    for (const auto& gs : built.structure.groups) {
        REQUIRE(gs.size() == 1);
        CHECK(gs[0].support.size() == 2);
    }
}

TEST_CASE("q=3, l=2 brute-forced minimum distance fixture") {
    auto built = curve_cover::build_hermitian_lrc(3, 2);
    auto d = evalcode::min_distance_bruteforce(built.code, 100000);
    REQUIRE(d.has_value());
    CHECK(*d == 17);  // frozen exhaustive scan over (9^6-1)/8 scalar classes
}

TEST_CASE("every coordinate of the q=3 code recovers on random codewords") {
    std::mt19937_64 rng(37);
    auto built = curve_cover::build_hermitian_lrc(3, 2);
    const auto& F = *built.code.field;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<gf::elem> msg(built.code.k);
        for (auto& v : msg) v = rng() % F.q();
        auto w = evalcode::encode(built.code, msg);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto& g = built.structure.groups[i][0];
            gf::elem v = 0;
            for (std::size_t j = 0; j < g.support.size(); ++j)
                v = F.add(v, F.mul(g.lambda[j], w[g.support[j]]));
            CHECK(v == w[i]);
        }
    }
}

TEST_CASE("larger l grows the dimension monotonically") {
    std::size_t prev = 0;
    for (std::uint32_t l : {0u, 1u, 2u, 3u}) {
        auto built = curve_cover::build_hermitian_lrc(3, l);
        CHECK(built.code.k > prev);
        prev = built.code.k;
    }
    // l = 0 is the x-only Reed-Solomon-style layer: k = q-1
    CHECK(curve_cover::build_hermitian_lrc(3, 0).code.k == 2);
}

TEST_CASE("power cover q=4, s=5 drops the x=0 fiber and has locality 4") {
    auto built = curve_cover::build_power_cover_lrc(4, 5, 3);
    CHECK(built.code.n() == 60);  // q^3 - q
    CHECK(built.structure.locality() == 4);
    CHECK(recovery::certify(built.code, built.structure).ok);
    const auto& F = *built.code.field;
    // each group stays inside one fiber of (x, y) -> (x^s, y)
    for (std::size_t i = 0; i < built.code.n(); ++i) {
        auto [x, y] = std::pair{built.code.points[i].coords[0], built.code.points[i].coords[1]};
        for (const auto& g : built.structure.groups[i])
            for (std::size_t s : g.support) {
                CHECK(built.code.points[s].coords[1] == y);
                CHECK(F.pow(built.code.points[s].coords[0], 5) == F.pow(x, 5));
            }
    }
}

TEST_CASE("power cover basis respects the exponent filter") {
    auto built = curve_cover::build_power_cover_lrc(4, 5, 3);
    for (const auto& be : built.code.basis) {
        CHECK(be.exps[0] <= 4);
        CHECK(be.exps[0] % 5 <= 3);
        CHECK(be.exps[1] <= 3);
    }
}

TEST_CASE("power cover guards") {
    CHECK_THROWS_AS(curve_cover::build_power_cover_lrc(4, 3, 1), gf::field_error);  // 3 does not divide 5
    CHECK_THROWS_AS(curve_cover::build_power_cover_lrc(4, 1, 1), gf::field_error);
}
