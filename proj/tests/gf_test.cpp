// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf.hpp"

using namespace lrc;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},  {2, 3}, {3, 2}, {11, 1}, {13, 1},
    {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5},
    {37, 1}, {41, 1}, {43, 1}, {47, 1}, {7, 2}, {53, 1}, {59, 1}, {61, 1},
    {2, 6}, {67, 1}, {71, 1}, {73, 1}, {79, 1}, {3, 4}};

}  // namespace

TEST_CASE("field axioms hold exhaustively for every prime power q <= 81") {
    for (auto [p, m] : kSmallFields) {
        auto f = gf::Field::make(p, m);
        const auto& F = *f;
        const gf::elem q = F.q();
        REQUIRE(q <= 81);
        // unary and pairwise laws, all pairs
        for (gf::elem a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (gf::elem b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
            }
        }
        // associativity and distributivity, all triples
        for (gf::elem a = 0; a < q; ++a)
            for (gf::elem b = 0; b < q; ++b)
                for (gf::elem c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
    }
}

TEST_CASE("lex-smallest irreducible modulus is reproducible") {
    CHECK(gf::Field::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2+1
    CHECK(gf::Field::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1
    CHECK(gf::Field::make(13, 1)->modulus() == std::vector<std::uint32_t>{0, 1});    // x
    // deterministic across constructions
    CHECK(gf::Field::make(2, 6)->modulus() == gf::Field::make(2, 6)->modulus());
}

TEST_CASE("make_with_modulus checks irreducibility") {
    CHECK_NOTHROW(gf::Field::make_with_modulus(2, 2, {1, 1, 1}));
    CHECK_THROWS_AS(gf::Field::make_with_modulus(2, 2, {1, 0, 1}),  // (x+1)^2
                    gf::field_error);
    CHECK_THROWS_AS(gf::Field::make(4, 1), gf::field_error);  // p must be prime
    CHECK_THROWS_AS(gf::Field::make(6, 2), gf::field_error);
}

TEST_CASE("generator has full multiplicative order") {
    for (auto [p, m] : {std::pair{13u, 1u}, {2u, 4u}, {3u, 2u}, {2u, 6u}}) {
        auto f = gf::Field::make(p, m);
        const auto& F = *f;
        gf::elem g = F.generator();
        gf::elem t = g;
        std::uint32_t order = 1;
        while (t != 1) {
            t = F.mul(t, g);
            ++order;
        }
        CHECK(order == F.q() - 1);
    }
}

TEST_CASE("pow matches repeated multiplication and handles negatives") {
    auto f = gf::Field::make(3, 2);
    const auto& F = *f;
    for (gf::elem a = 1; a < F.q(); ++a) {
        gf::elem acc = 1;
        for (int e = 0; e <= 10; ++e) {
            CHECK(F.pow(a, e) == acc);
            acc = F.mul(acc, a);
        }
        CHECK(F.pow(a, -1) == F.inv(a));
        CHECK(F.mul(F.pow(a, -3), F.pow(a, 3)) == 1);
    }
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.pow(0, 5) == 0);
}

TEST_CASE("trace and norm land in the subfield") {
    auto f = gf::Field::make(2, 6);
    const auto& F = *f;
    for (std::uint32_t d : {1u, 2u, 3u}) {
        for (gf::elem x = 0; x < F.q(); ++x) {
            CHECK(F.in_subfield(F.trace(x, d), d));
            CHECK(F.in_subfield(F.norm(x, d), d));
        }
        // trace is GF(p^d)-linear and surjective onto the subfield
        std::vector<bool> hit(F.q(), false);
        for (gf::elem x = 0; x < F.q(); ++x) hit[F.trace(x, d)] = true;
        std::size_t hits = 0;
        for (gf::elem v = 0; v < F.q(); ++v)
            if (hit[v]) ++hits;
        CHECK(hits == (1u << d));
    }
    // subfield sizes
    std::size_t in2 = 0;
    for (gf::elem x = 0; x < F.q(); ++x)
        if (F.in_subfield(x, 2)) ++in2;
    CHECK(in2 == 4);
}

TEST_CASE("trace to the prime field sums Frobenius powers") {
    auto f = gf::Field::make(2, 4);
    const auto& F = *f;
    for (gf::elem x = 0; x < F.q(); ++x) {
        gf::elem s = 0;
        gf::elem t = x;
        for (int i = 0; i < 4; ++i) {
            s = F.add(s, t);
            t = F.mul(t, t);
        }
        CHECK(F.trace(x, 1) == s);
    }
}

TEST_CASE("coeffs round-trips the base-p representation") {
    auto f = gf::Field::make(3, 3);
    const auto& F = *f;
    for (gf::elem x = 0; x < F.q(); ++x) {
        auto c = F.coeffs(x);
        CHECK(c.size() == 3);
        CHECK(F.from_coeffs(c) == x);
    }
    CHECK(F.enumerate().size() == F.q());
}

TEST_CASE("FieldElement wrapper mirrors the code-level operations") {
    auto f = gf::Field::make(13, 1);
    gf::FieldElement a(f, 10), b(f, 4);
    CHECK((a + b).code() == 1);
    CHECK((a * b).code() == 1);
    CHECK((a - b).code() == 6);
    CHECK((a / b).code() == f->div(10, 4));
    CHECK((-a).code() == 3);
    CHECK(a.pow(2).code() == 9);
    auto g = gf::Field::make(11, 1);
    gf::FieldElement c(g, 3);
    CHECK_THROWS_AS((void)(a + c), gf::field_error);
}

TEST_CASE("prime and prime-power helpers") {
    CHECK(gf::is_prime(2));
    CHECK(gf::is_prime(13));
    CHECK(!gf::is_prime(1));
    CHECK(!gf::is_prime(91));
    CHECK(gf::factor_prime_power(8) == std::pair<std::uint32_t, std::uint32_t>{2, 3});
    CHECK(gf::factor_prime_power(729) == std::pair<std::uint32_t, std::uint32_t>{3, 6});
    CHECK(gf::factor_prime_power(13) == std::pair<std::uint32_t, std::uint32_t>{13, 1});
    CHECK_THROWS_AS(gf::factor_prime_power(12), gf::field_error);
}

TEST_CASE("describe names the field") {
    CHECK(gf::Field::make(13, 1)->describe() == "GF(13)");
    CHECK(gf::Field::make(3, 6)->describe() == "GF(729) = GF(3^6)");
}
