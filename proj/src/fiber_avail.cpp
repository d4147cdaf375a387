// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "fiber_avail.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace lrc::fiber_avail {

GKCurve gk_points(std::uint32_t q, std::uint32_t N) {
    if (N < 3 || N % 2 == 0) throw gf::field_error("GK parameter N must be odd and >= 3");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < 2 * N; ++i) {
        order *= q;
        if (order > gf::kMaxOrder) throw gf::field_error("q^{2N} exceeds the field order guard");
    }

    GKCurve curve;
    curve.q = q;
    curve.N = N;
    std::uint64_t qN = 1;
    for (std::uint32_t i = 0; i < N; ++i) qN *= q;
    curve.s = static_cast<std::uint32_t>((qN + 1) / (q + 1));

    auto [p, e] = gf::factor_prime_power(q);
    curve.field = gf::Field::make(p, 2 * N * e);
    const auto& F = *curve.field;

    // preimage maps for the two defining equations
    std::unordered_map<gf::elem, std::vector<gf::elem>> x_pre;  // x^q + x = c
    std::unordered_map<gf::elem, std::vector<gf::elem>> z_pre;  // z^s = c
    for (gf::elem u = 0; u < F.q(); ++u) {
        x_pre[F.add(F.pow(u, q), u)].push_back(u);
        z_pre[F.pow(u, curve.s)].push_back(u);
    }

    for (gf::elem y = 0; y < F.q(); ++y) {
        auto xs = x_pre.find(F.pow(y, q + 1));
        if (xs == x_pre.end()) continue;
        auto zs = z_pre.find(F.sub(F.pow(y, static_cast<long long>(q) * q), y));
        if (zs == z_pre.end()) continue;
        for (gf::elem x : xs->second)
            for (gf::elem z : zs->second) curve.affine_points.push_back({x, y, z});
    }
    std::sort(curve.affine_points.begin(), curve.affine_points.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a[1], a[0], a[2]) < std::tie(b[1], b[0], b[2]);
              });
    for (const auto& pt : curve.affine_points) {
        if (pt[2] == 0)
            ++curve.z_zero_count;
        else
            curve.evaluation_points.push_back(pt);
    }

    std::uint64_t q2 = static_cast<std::uint64_t>(q) * q;
    curve.formula_point_count = order * q2 - qN * q2 * q + qN * q2 + 1;
    return curve;
}

GKCode build_gk_lrc(std::uint32_t q, std::uint32_t N, std::uint32_t l, bool compute_rank) {
    GKCurve curve = gk_points(q, N);
    const auto f = curve.field;
    const auto& F = *f;
    const std::uint32_t s = curve.s;

    // cap on l: below it the y-powers stay independent on the fibers
    std::uint64_t qN = 1;
    for (std::uint32_t i = 0; i < N; ++i) qN *= q;
    std::uint64_t cap = qN * q * q + qN * q - q - 1;
    if (l >= cap) throw gf::field_error("l exceeds the construction cap");

    std::vector<evalcode::EvaluationPoint> points;
    points.reserve(curve.evaluation_points.size());
    for (const auto& pt : curve.evaluation_points) points.push_back({{pt[0], pt[1], pt[2]}, 0});

    std::vector<evalcode::BasisElem> basis;
    for (std::uint32_t kappa = 0; kappa <= l; ++kappa)
        for (std::uint32_t j = 0; j + 2 <= s; ++j)
            for (std::uint32_t i = 0; i + 2 <= q; ++i) {
                evalcode::BasisElem be;
                be.exps = {i, kappa, j};  // coords are (x, y, z)
                basis.push_back(std::move(be));
            }

    GKCode gk;
    gk.l = l;
    gk.k_structural = static_cast<std::size_t>(q - 1) * (s - 1) * (l + 1);
    gk.code = evalcode::build_code(f, std::move(points), std::move(basis), {"x", "y", "z"},
                                   compute_rank);

    // z-fiber groups share (x, y); x-fiber groups share (y, z)
    std::map<std::pair<gf::elem, gf::elem>, std::vector<std::size_t>> z_fibers, x_fibers;
    for (std::size_t i = 0; i < gk.code.n(); ++i) {
        const auto& c = gk.code.points[i].coords;
        z_fibers[{c[0], c[1]}].push_back(i);
        x_fibers[{c[1], c[2]}].push_back(i);
    }

    gk.structure.field = f;
    gk.structure.groups.resize(gk.code.n());
    auto add_groups = [&](const std::vector<std::size_t>& idxs, std::size_t coord_pos,
                          std::size_t expected) {
        if (idxs.size() != expected) throw gf::field_error("GK fiber is not full");
        for (std::size_t i = 0; i < idxs.size(); ++i) {
            recovery::RepairGroup g;
            g.target = idxs[i];
            std::vector<gf::elem> nodes;
            for (std::size_t j = 0; j < idxs.size(); ++j) {
                if (j == i) continue;
                g.support.push_back(idxs[j]);
                nodes.push_back(gk.code.points[idxs[j]].coords[coord_pos]);
            }
            g.lambda = poly::lagrange_coeffs_at(F, nodes,
                                                gk.code.points[idxs[i]].coords[coord_pos]);
            gk.structure.groups[g.target].push_back(std::move(g));
        }
    };
    for (const auto& [key, idxs] : z_fibers) add_groups(idxs, 2, s);
    for (const auto& [key, idxs] : x_fibers) add_groups(idxs, 0, q);
    return gk;
}

}  // namespace lrc::fiber_avail
