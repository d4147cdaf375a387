// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "tamo_barg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lrc::tamo_barg {

GoodPolynomial good_from_multiplicative(gf::FieldPtr f, std::uint32_t r) {
    const auto& F = *f;
    if (r < 1) throw gf::field_error("locality must be >= 1");
    if ((F.q() - 1) % (r + 1) != 0)
        throw gf::field_error("(r+1) must divide q-1 for the multiplicative construction");
    GoodPolynomial gp;
    gp.r = r;
    gp.g = poly::UniPoly::monomial(f, r + 1);
    // order-(r+1) subgroup of F_q^*
    gf::elem h = F.pow(F.generator(), (F.q() - 1) / (r + 1));
    std::vector<gf::elem> H;
    gf::elem t = 1;
    do {
        H.push_back(t);
        t = F.mul(t, h);
    } while (t != 1);
    std::vector<bool> seen(F.q(), false);
    for (gf::elem a = 1; a < F.q(); ++a) {
        if (seen[a]) continue;
        std::vector<gf::elem> part;
        for (gf::elem u : H) {
            gf::elem v = F.mul(a, u);
            part.push_back(v);
            seen[v] = true;
        }
        std::sort(part.begin(), part.end());
        gp.partition.push_back(std::move(part));
    }
    return gp;
}

GoodPolynomial good_from_additive(gf::FieldPtr f, const std::vector<gf::elem>& gens) {
    const auto& F = *f;
    // span of the generators over GF(p)
    std::set<gf::elem> H{0};
    for (gf::elem g : gens) {
        std::set<gf::elem> next;
        for (gf::elem h : H) {
            gf::elem acc = h;
            for (std::uint32_t c = 0; c < F.p(); ++c) {
                next.insert(acc);
                acc = F.add(acc, g);
            }
        }
        H = std::move(next);
    }
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) expected *= F.p();
    if (H.size() != expected)
        throw gf::field_error("subgroup generators are not independent over GF(p)");
    if (H.size() < 2) throw gf::field_error("additive subgroup must have size >= 2 (r >= 1)");
    GoodPolynomial gp;
    gp.r = static_cast<std::uint32_t>(H.size()) - 1;
    gp.g = poly::UniPoly::constant(f, 1);
    for (gf::elem a : H) gp.g = gp.g * poly::UniPoly(f, {F.neg(a), 1});
    std::vector<bool> seen(F.q(), false);
    for (gf::elem a = 0; a < F.q(); ++a) {
        if (seen[a]) continue;
        std::vector<gf::elem> part;
        for (gf::elem h : H) {
            gf::elem v = F.add(a, h);
            part.push_back(v);
            seen[v] = true;
        }
        std::sort(part.begin(), part.end());
        gp.partition.push_back(std::move(part));
    }
    return gp;
}

GoodCheck verify_good(const poly::UniPoly& g, const std::vector<std::vector<gf::elem>>& partition) {
    GoodCheck res;
    if (partition.empty() || partition[0].empty()) {
        res.witness = "empty partition";
        return res;
    }
    const std::size_t part_size = partition[0].size();
    if (g.degree() != static_cast<int>(part_size)) {
        std::ostringstream os;
        os << "deg g = " << g.degree() << " but parts have size " << part_size
           << " (need deg g = r+1 = part size)";
        res.witness = os.str();
        return res;
    }
    std::set<gf::elem> all;
    for (const auto& part : partition) {
        if (part.size() != part_size) {
            res.witness = "parts have unequal sizes";
            return res;
        }
        for (gf::elem a : part) {
            if (!all.insert(a).second) {
                res.witness = "parts are not disjoint at element " + std::to_string(a);
                return res;
            }
        }
        gf::elem v0 = g.eval(part[0]);
        for (std::size_t i = 1; i < part.size(); ++i) {
            if (g.eval(part[i]) != v0) {
                std::ostringstream os;
                os << "g(" << part[0] << ") = " << v0 << " but g(" << part[i]
                   << ") = " << g.eval(part[i]);
                res.witness = os.str();
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

TamoBargCode build_tb(const GoodPolynomial& good, std::uint32_t k) {
    const auto f = good.g.field();
    const auto& F = *f;
    const std::uint32_t r = good.r;
    if (k % r != 0) throw gf::field_error("r must divide k");
    if (k / r > good.partition.size())
        throw gf::field_error("k/r exceeds the number of parts (design distance would be <= 0)");

    TamoBargCode tb;
    tb.good = good;
    tb.k = k;

    // evaluation domain in ascending element order, so word files read
    // naturally (point i is the i-th smallest domain element)
    std::vector<gf::elem> domain;
    for (const auto& part : good.partition) domain.insert(domain.end(), part.begin(), part.end());
    std::sort(domain.begin(), domain.end());
    std::vector<std::size_t> index_of(F.q(), 0);
    for (std::size_t i = 0; i < domain.size(); ++i) index_of[domain[i]] = i;
    std::vector<evalcode::EvaluationPoint> points;
    for (gf::elem a : domain) points.push_back({{a}, 0});
    const std::size_t n = points.size();

    std::vector<evalcode::BasisElem> basis;
    for (std::uint32_t j = 0; j < k / r; ++j)
        for (std::uint32_t i = 0; i < r; ++i) {
            evalcode::BasisElem be;
            be.exps = {i};
            be.g = good.g;
            be.gpow = j;
            basis.push_back(std::move(be));
        }

    tb.code = evalcode::build_code(f, std::move(points), std::move(basis));
    tb.design_distance = static_cast<int>(n) - static_cast<int>(k) - static_cast<int>(k / r) + 2;
    tb.code.design_distance = tb.design_distance;
    tb.code.distance_provenance = evalcode::DistanceProvenance::formula;

    // one repair group per coordinate: the other r members of its part
    tb.structure.field = f;
    tb.structure.groups.resize(n);
    for (const auto& part : good.partition) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            recovery::RepairGroup g;
            g.target = index_of[part[i]];
            std::vector<gf::elem> nodes;
            for (std::size_t j = 0; j < part.size(); ++j) {
                if (j == i) continue;
                g.support.push_back(index_of[part[j]]);
                nodes.push_back(part[j]);
            }
            g.lambda = poly::lagrange_coeffs_at(F, nodes, part[i]);
            tb.structure.groups[g.target].push_back(std::move(g));
        }
    }
    return tb;
}

}  // namespace lrc::tamo_barg
