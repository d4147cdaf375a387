// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "evalcode.hpp"
#include "tamo_barg.hpp"

using namespace lrc;

namespace {

// Independent slow evaluator: repeated multiplication only, no pow/tables.
gf::elem slow_eval(const gf::Field& F, const evalcode::BasisElem& be,
                   const std::vector<gf::elem>& coords) {
    gf::elem acc = 1;
    for (std::size_t c = 0; c < coords.size(); ++c)
        for (std::uint32_t e = 0; e < (c < be.exps.size() ? be.exps[c] : 0); ++e)
            acc = F.mul(acc, coords[c]);
    if (be.g) {
        gf::elem gv = 0;
        // Horner by hand
        for (std::size_t i = be.g->coeffs().size(); i-- > 0;)
            gv = F.add(F.mul(gv, coords[0]), be.g->coeffs()[i]);
        for (std::uint32_t e = 0; e < be.gpow; ++e) acc = F.mul(acc, gv);
    }
    return acc;
}

evalcode::EvaluationCode rs_code(std::uint32_t q, std::uint32_t k, std::uint32_t n) {
    auto [p, m] = gf::factor_prime_power(q);
    auto f = gf::Field::make(p, m);
    std::vector<evalcode::EvaluationPoint> pts;
    for (gf::elem x = 0; x < n; ++x) pts.push_back({{x}, 0});
    std::vector<evalcode::BasisElem> basis;
    for (std::uint32_t i = 0; i < k; ++i) {
        evalcode::BasisElem be;
        be.exps = {i};
        basis.push_back(std::move(be));
    }
    return evalcode::build_code(f, std::move(pts), std::move(basis));
}

// Oracle: minimum distance over the full message space (no scalar-class
// shortcut), for cross-checking the production scan.
int min_distance_full_oracle(const evalcode::EvaluationCode& code) {
    const auto& F = *code.field;
    const std::size_t k = code.k;
    std::vector<gf::elem> msg(k, 0);
    int best = static_cast<int>(code.n()) + 1;
    while (true) {
        std::size_t i = 0;
        while (i < k && msg[i] == F.q() - 1) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
        auto w = evalcode::encode(code, msg);
        int wt = 0;
        for (gf::elem s : w)
            if (s != 0) ++wt;
        best = std::min(best, wt);
    }
    return best;
}

}  // namespace

TEST_CASE("worked GF(13) code: n=12, k=6 from the six-monomial basis") {
    auto f = gf::Field::make(13, 1);
    std::vector<evalcode::EvaluationPoint> pts;
    for (gf::elem x = 1; x <= 12; ++x) pts.push_back({{x}, 0});
    std::vector<evalcode::BasisElem> basis;
    for (std::uint32_t e : {0u, 1u, 3u, 4u, 6u, 7u}) {
        evalcode::BasisElem be;
        be.exps = {e};
        basis.push_back(std::move(be));
    }
    auto code = evalcode::build_code(f, std::move(pts), std::move(basis));
    CHECK(code.n() == 12);
    CHECK(code.k == 6);
}

TEST_CASE("constant basis gives k=1 and d=n") {
    auto code = rs_code(5, 1, 5);
    CHECK(code.k == 1);
    auto d = evalcode::min_distance_bruteforce(code, 1000);
    REQUIRE(d.has_value());
    CHECK(*d == 5);
}

TEST_CASE("generator entries match an independent slow evaluator") {
    auto f = gf::Field::make(13, 1);
    auto tb = tamo_barg::build_tb(tamo_barg::good_from_multiplicative(f, 2), 6);
    const auto& code = tb.code;
    for (std::size_t i = 0; i < code.basis.size(); ++i)
        for (std::size_t j = 0; j < code.n(); ++j)
            CHECK(code.generator.at(i, j) ==
                  slow_eval(*f, code.basis[i], code.points[j].coords));
}

TEST_CASE("encode is linear") {
    std::mt19937_64 rng(17);
    auto code = rs_code(13, 4, 13);
    const auto& F = *code.field;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<gf::elem> u(code.k), v(code.k), s(code.k);
        for (std::size_t i = 0; i < code.k; ++i) {
            u[i] = rng() % F.q();
            v[i] = rng() % F.q();
            s[i] = F.add(u[i], v[i]);
        }
        auto eu = evalcode::encode(code, u);
        auto ev = evalcode::encode(code, v);
        auto es = evalcode::encode(code, s);
        for (std::size_t j = 0; j < code.n(); ++j) CHECK(es[j] == F.add(eu[j], ev[j]));
    }
    // unit vector hits the corresponding encoding row
    std::vector<gf::elem> e1(code.k, 0);
    e1[1] = 1;
    auto w = evalcode::encode(code, e1);
    for (std::size_t j = 0; j < code.n(); ++j) CHECK(w[j] == code.encoding_row(1)[j]);
    CHECK_THROWS_AS(evalcode::encode(code, std::vector<gf::elem>(code.k + 1, 0)),
                    gf::field_error);
}

TEST_CASE("dependent basis keeps full matrix but reduced encoding") {
    auto f = gf::Field::make(5, 1);
    std::vector<evalcode::EvaluationPoint> pts;
    for (gf::elem x = 0; x < 5; ++x) pts.push_back({{x}, 0});
    // x, 2x, x^2: row 1 dependent
    std::vector<evalcode::BasisElem> basis(3);
    basis[0].exps = {1};
    basis[1].exps = {1};
    basis[2].exps = {2};
    auto code = evalcode::build_code(f, std::move(pts), std::move(basis));
    CHECK(code.basis.size() == 3);
    CHECK(code.k == 2);
    CHECK(code.encoding_rows == std::vector<std::size_t>{0, 2});
}

TEST_CASE("solve_message inverts encode and rejects non-codewords") {
    std::mt19937_64 rng(23);
    auto code = rs_code(13, 5, 12);
    const auto& F = *code.field;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<gf::elem> msg(code.k);
        for (auto& v : msg) v = rng() % F.q();
        auto w = evalcode::encode(code, msg);
        auto back = evalcode::solve_message(code, w);
        REQUIRE(back.has_value());
        CHECK(evalcode::encode(code, *back) == w);
        // corrupt one coordinate: d > 1 so the word falls out of the code
        auto bad = w;
        bad[trial % bad.size()] = F.add(bad[trial % bad.size()], 1);
        CHECK(!evalcode::solve_message(code, bad).has_value());
    }
}

TEST_CASE("RS(4,2) over GF(5) is MDS with d=3") {
    auto code = rs_code(5, 2, 4);
    auto d = evalcode::min_distance_bruteforce(code, 1000);
    REQUIRE(d.has_value());
    CHECK(*d == 3);
    CHECK(*d == min_distance_full_oracle(code));
}

TEST_CASE("scalar-class scan agrees with the full-space oracle") {
    // several small codes, including one with a dependent basis
    for (auto [q, k, n] : {std::tuple{5u, 3u, 5u}, {7u, 2u, 6u}, {4u, 3u, 4u}}) {
        auto code = rs_code(q, k, n);
        auto d = evalcode::min_distance_bruteforce(code, 100000);
        REQUIRE(d.has_value());
        CHECK(*d == min_distance_full_oracle(code));
    }
}

TEST_CASE("min distance refuses when over budget") {
    auto code = rs_code(13, 6, 13);
    CHECK(!evalcode::min_distance_bruteforce(code, 100).has_value());
    CHECK(evalcode::min_distance_bruteforce(code, 1u << 21).has_value());
}

TEST_CASE("received word erasure accounting") {
    evalcode::ReceivedWord w;
    w.symbols = {1, evalcode::ReceivedWord::kErased, 3, evalcode::ReceivedWord::kErased};
    CHECK(w.erasure_count() == 2);
    CHECK(w.erased(1));
    CHECK(!w.erased(0));
}

TEST_CASE("basis names render for reports") {
    evalcode::BasisElem be;
    be.exps = {2, 1};
    CHECK(be.name({"x", "y"}) == "x^2*y");
    evalcode::BasisElem one;
    CHECK(one.name({"x"}) == "1");
}
