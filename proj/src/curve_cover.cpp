// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "curve_cover.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace lrc::curve_cover {

namespace {

// preimages of u -> u^q + u (form-dependent LHS variable)
std::unordered_map<gf::elem, std::vector<gf::elem>> trace_preimages(const gf::Field& F,
                                                                    std::uint32_t q) {
    std::unordered_map<gf::elem, std::vector<gf::elem>> pre;
    for (gf::elem u = 0; u < F.q(); ++u) pre[F.add(F.pow(u, q), u)].push_back(u);
    return pre;
}

}  // namespace

HermitianCurve hermitian_points(std::uint32_t q, HermitianForm form) {
    auto [p, e] = gf::factor_prime_power(q);
    if (static_cast<std::uint64_t>(q) * q > gf::kMaxOrder)
        throw gf::field_error("q^2 exceeds the field order guard");
    HermitianCurve curve;
    curve.q = q;
    curve.form = form;
    curve.field = gf::Field::make(p, 2 * e);
    const auto& F = *curve.field;

    auto pre = trace_preimages(F, q);
    // X-form: x^q + x = y^{q+1}; Y-form: y^q + y = x^{q+1}.
    // Enumeration is sorted by (y, x) codes either way.
    if (form == HermitianForm::x_form) {
        for (gf::elem y = 0; y < F.q(); ++y) {
            gf::elem rhs = F.pow(y, q + 1);
            auto it = pre.find(rhs);
            if (it == pre.end()) continue;
            std::vector<gf::elem> xs = it->second;
            std::sort(xs.begin(), xs.end());
            for (gf::elem x : xs) curve.affine_points.emplace_back(x, y);
        }
    } else {
        std::vector<std::pair<gf::elem, gf::elem>> pts;
        for (gf::elem x = 0; x < F.q(); ++x) {
            gf::elem rhs = F.pow(x, q + 1);
            auto it = pre.find(rhs);
            if (it == pre.end()) continue;
            for (gf::elem y : it->second) pts.emplace_back(x, y);
        }
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
            return std::tie(a.second, a.first) < std::tie(b.second, b.first);
        });
        curve.affine_points = std::move(pts);
    }
    if (curve.affine_points.size() != static_cast<std::size_t>(q) * q * q)
        throw gf::field_error("Hermitian point count mismatch");
    return curve;
}

BuiltCode build_hermitian_lrc(std::uint32_t q, std::uint32_t l) {
    HermitianCurve curve = hermitian_points(q, HermitianForm::x_form);
    const auto f = curve.field;
    const auto& F = *f;

    std::vector<evalcode::EvaluationPoint> points;
    points.reserve(curve.affine_points.size());
    for (const auto& [x, y] : curve.affine_points) points.push_back({{x, y}, 0});

    std::vector<evalcode::BasisElem> basis;
    for (std::uint32_t j = 0; j <= l; ++j)
        for (std::uint32_t i = 0; i + 1 <= q - 1; ++i) {
            evalcode::BasisElem be;
            be.exps = {i, j};
            basis.push_back(std::move(be));
        }

    BuiltCode built;
    built.code = evalcode::build_code(f, std::move(points), std::move(basis), {"x", "y"});

    // fibers of the y-projection: q points per y on the curve
    std::map<gf::elem, std::vector<std::size_t>> fibers;
    for (std::size_t i = 0; i < built.code.points.size(); ++i)
        fibers[built.code.points[i].coords[1]].push_back(i);

    built.structure.field = f;
    built.structure.groups.resize(built.code.n());
    for (const auto& [y, idxs] : fibers) {
        if (idxs.size() != q) throw gf::field_error("y-fiber is not full");
        for (std::size_t i = 0; i < idxs.size(); ++i) {
            recovery::RepairGroup g;
            g.target = idxs[i];
            std::vector<gf::elem> nodes;
            for (std::size_t j = 0; j < idxs.size(); ++j) {
                if (j == i) continue;
                g.support.push_back(idxs[j]);
                nodes.push_back(built.code.points[idxs[j]].coords[0]);
            }
            g.lambda =
                poly::lagrange_coeffs_at(F, nodes, built.code.points[idxs[i]].coords[0]);
            built.structure.groups[g.target].push_back(std::move(g));
        }
    }
    return built;
}

BuiltCode build_power_cover_lrc(std::uint32_t q, std::uint32_t s, std::uint32_t y_cap) {
    if (s < 2 || (q + 1) % s != 0)
        throw gf::field_error("power cover needs s >= 2 with s | q+1");
    HermitianCurve curve = hermitian_points(q, HermitianForm::y_form);
    const auto f = curve.field;
    const auto& F = *f;

    // drop the degenerate x = 0 fiber, then sort so each fiber of
    // (x, y) -> (x^s, y) is a consecutive run
    std::vector<std::pair<gf::elem, gf::elem>> pts;
    for (const auto& pt : curve.affine_points)
        if (pt.first != 0) pts.push_back(pt);
    auto fiber_key = [&](const std::pair<gf::elem, gf::elem>& pt) {
        return std::make_tuple(pt.second, F.pow(pt.first, s), pt.first);
    };
    std::sort(pts.begin(), pts.end(),
              [&](const auto& a, const auto& b) { return fiber_key(a) < fiber_key(b); });

    std::vector<evalcode::EvaluationPoint> points;
    points.reserve(pts.size());
    for (const auto& [x, y] : pts) points.push_back({{x, y}, 0});

    std::vector<evalcode::BasisElem> basis;
    for (std::uint32_t b = 0; b <= y_cap; ++b)
        for (std::uint32_t a = 0; a <= q; ++a) {
            if (a % s > s - 2) continue;
            evalcode::BasisElem be;
            be.exps = {a, b};
            basis.push_back(std::move(be));
        }

    BuiltCode built;
    built.code = evalcode::build_code(f, std::move(points), std::move(basis), {"x", "y"});

    built.structure.field = f;
    built.structure.groups.resize(built.code.n());
    std::size_t i = 0;
    while (i < built.code.n()) {
        std::size_t j = i;
        auto key_i = std::make_pair(built.code.points[i].coords[1],
                                    F.pow(built.code.points[i].coords[0], s));
        while (j < built.code.n() &&
               std::make_pair(built.code.points[j].coords[1],
                              F.pow(built.code.points[j].coords[0], s)) == key_i)
            ++j;
        if (j - i != s) throw gf::field_error("power-map fiber is not full");
        for (std::size_t a = i; a < j; ++a) {
            recovery::RepairGroup g;
            g.target = a;
            std::vector<gf::elem> nodes;
            for (std::size_t b = i; b < j; ++b) {
                if (b == a) continue;
                g.support.push_back(b);
                nodes.push_back(built.code.points[b].coords[0]);
            }
            g.lambda = poly::lagrange_coeffs_at(F, nodes, built.code.points[a].coords[0]);
            built.structure.groups[a].push_back(std::move(g));
        }
        i = j;
    }
    return built;
}

}  // namespace lrc::curve_cover
