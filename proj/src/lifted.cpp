// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "lifted.hpp"

#include <algorithm>
#include <unordered_map>

namespace lrc::lifted {

namespace {

std::uint32_t modulus_degree(const LineFamily& lines) {
    if (lines.kind == CurveKind::hermitian) return lines.q_or_r + 1;
    return (1u << lines.q_or_r) - 1;
}

std::uint32_t delta_default(const LineFamily& lines) {
    return lines.kind == CurveKind::hermitian ? lines.q_or_r - 1
                                              : (1u << (lines.q_or_r - 1)) - 2;
}

struct Caps {
    std::uint32_t a, b;
};
Caps scan_caps(const LineFamily& lines) {
    if (lines.kind == CurveKind::hermitian) {
        std::uint32_t q = lines.q_or_r;
        return {q, q * q - 1};
    }
    std::uint32_t n = 1u << lines.q_or_r;
    return {n - 2, n - 1};
}

}  // namespace

LineFamily hermitian_lines(std::uint32_t q) {
    auto [p, e] = gf::factor_prime_power(q);
    return {CurveKind::hermitian, q, gf::Field::make(p, 2 * e)};
}

LineFamily norm_trace_lines(std::uint32_t r) {
    if (r < 2 || r > 16) throw gf::field_error("norm-trace degree r out of range");
    return {CurveKind::norm_trace2, r, gf::Field::make(2, r)};
}

poly::UniPoly line_modulus(const LineFamily& lines, gf::elem alpha, gf::elem beta) {
    const auto f = lines.field;
    const auto& F = *f;
    poly::UniPoly line(f, {beta, alpha});
    if (lines.kind == CurveKind::hermitian) {
        const std::uint32_t q = lines.q_or_r;
        // (alpha t + beta)^q + (alpha t + beta) - t^{q+1}
        poly::UniPoly m = line.pow(q) + line - poly::UniPoly::monomial(f, q + 1);
        return m;
    }
    // Tr(alpha t + beta) + t^{2^r - 1} over GF(2^r): the Frobenius powers of
    // a linear polynomial stay binomials.
    const std::uint32_t r = lines.q_or_r;
    std::vector<gf::elem> coeffs((1u << r), 0);
    for (std::uint32_t i = 0; i < r; ++i) {
        std::uint32_t e = 1u << i;
        coeffs[e] = F.add(coeffs[e], F.pow(alpha, e));
        coeffs[0] = F.add(coeffs[0], F.pow(beta, e));
    }
    std::uint32_t d = (1u << r) - 1;
    coeffs[d] = F.add(coeffs[d], 1);
    coeffs.resize(d + 1);
    return poly::UniPoly(f, std::move(coeffs));
}

int line_degree(const LineFamily& lines, std::uint32_t a, std::uint32_t b, gf::elem alpha,
                gf::elem beta) {
    const auto f = lines.field;
    poly::UniPoly line(f, {beta, alpha});
    poly::UniPoly restricted = poly::UniPoly::monomial(f, a) * line.pow(b);
    return poly::mod(restricted, line_modulus(lines, alpha, beta)).degree();
}

bool monomial_is_good(const LineFamily& lines, std::uint32_t a, std::uint32_t b,
                      std::uint32_t delta) {
    const auto& F = *lines.field;
    for (gf::elem alpha = 1; alpha < F.q(); ++alpha)
        for (gf::elem beta = 0; beta < F.q(); ++beta)
            if (line_degree(lines, a, b, alpha, beta) > static_cast<int>(delta)) return false;
    return true;
}

FilterVerdict fast_filter(std::uint32_t a, std::uint32_t b, std::uint32_t delta) {
    // total degree within the bound: reduction can only lower the degree
    return a + b <= delta ? FilterVerdict::good : FilterVerdict::unknown;
}

std::size_t GoodMonomialSet::baseline_count() const {
    std::size_t c = 0;
    for (const auto& m : monomials)
        if (!m.sporadic) ++c;
    return c;
}

std::size_t GoodMonomialSet::sporadic_count() const { return monomials.size() - baseline_count(); }

GoodMonomialSet good_monomials(const LineFamily& lines, std::uint32_t delta) {
    const auto& F = *lines.field;
    const Caps caps = scan_caps(lines);
    const std::uint32_t D = modulus_degree(lines);
    const std::size_t na = caps.a + 1, nb = caps.b + 1;

    std::vector<char> good(na * nb, 1);

    // Per line: chain P_b = (alpha t + beta)^b mod m and Q_{a,b} = t^a P_b
    // mod m, each step a multiply-by-linear with a single overflow
    // reduction.  One pass over the (a, b) grid per line.
    std::vector<gf::elem> m_red(D);  // m / lead, below the leading term
    std::vector<gf::elem> P(D), Q(D);
    for (gf::elem alpha = 1; alpha < F.q(); ++alpha) {
        for (gf::elem beta = 0; beta < F.q(); ++beta) {
            poly::UniPoly m = line_modulus(lines, alpha, beta);
            if (m.degree() != static_cast<int>(D))
                throw gf::field_error("unexpected line modulus degree");
            gf::elem linv = F.inv(m.lead());
            for (std::uint32_t i = 0; i < D; ++i) m_red[i] = F.mul(linv, m.coeff(i));

            auto reduce_overflow = [&](std::vector<gf::elem>& c, gf::elem v) {
                if (v == 0) return;
                // c += v * t^D  ==>  c -= v * (m / lead  below t^D)
                for (std::uint32_t i = 0; i < D; ++i)
                    if (m_red[i] != 0) c[i] = F.sub(c[i], F.mul(v, m_red[i]));
            };
            auto degree_of = [&](const std::vector<gf::elem>& c) {
                for (std::uint32_t i = D; i-- > 0;)
                    if (c[i] != 0) return static_cast<int>(i);
                return -1;
            };

            std::fill(P.begin(), P.end(), 0);
            P[0] = 1;
            for (std::uint32_t b = 0;; ++b) {
                Q = P;
                for (std::uint32_t a = 0;; ++a) {
                    if (good[a * nb + b] && degree_of(Q) > static_cast<int>(delta))
                        good[a * nb + b] = 0;
                    if (a == caps.a) break;
                    // Q <- t * Q mod m
                    gf::elem ov = Q[D - 1];
                    for (std::uint32_t i = D - 1; i > 0; --i) Q[i] = Q[i - 1];
                    Q[0] = 0;
                    reduce_overflow(Q, ov);
                }
                if (b == caps.b) break;
                // P <- (alpha t + beta) * P mod m
                gf::elem ov = F.mul(alpha, P[D - 1]);
                for (std::uint32_t i = D - 1; i > 0; --i)
                    P[i] = F.add(F.mul(beta, P[i]), F.mul(alpha, P[i - 1]));
                P[0] = F.mul(beta, P[0]);
                reduce_overflow(P, ov);
            }
        }
    }

    GoodMonomialSet set;
    set.delta = delta;
    set.a_cap = caps.a;
    set.b_cap = caps.b;
    for (std::uint32_t a = 0; a <= caps.a; ++a)
        for (std::uint32_t b = 0; b <= caps.b; ++b)
            if (good[a * nb + b]) set.monomials.push_back({a, b, a + b > delta});
    return set;
}

namespace {

// Shared lifted-code assembly: monomial scan, evaluation code, and one
// Lagrange repair group per (point, line) pair with enough survivors.
LiftedCode build_lifted(const LineFamily& lines,
                        const std::vector<std::pair<gf::elem, gf::elem>>& curve_points,
                        std::uint32_t delta, bool horizontal_groups) {
    const auto f = lines.field;
    const auto& F = *f;

    LiftedCode lc;
    lc.delta = delta;
    lc.monomials = good_monomials(lines, delta);

    std::vector<evalcode::EvaluationPoint> points;
    points.reserve(curve_points.size());
    for (const auto& [x, y] : curve_points) points.push_back({{x, y}, 0});
    std::vector<evalcode::BasisElem> basis;
    for (const auto& m : lc.monomials.monomials) {
        evalcode::BasisElem be;
        be.exps = {m.a, m.b};
        basis.push_back(std::move(be));
    }
    lc.code = evalcode::build_code(f, std::move(points), std::move(basis), {"x", "y"});

    std::unordered_map<std::uint64_t, std::size_t> index_of;
    for (std::size_t i = 0; i < lc.code.points.size(); ++i) {
        const auto& c = lc.code.points[i].coords;
        index_of[static_cast<std::uint64_t>(c[0]) * F.q() + c[1]] = i;
    }

    lc.structure.field = f;
    lc.structure.groups.resize(lc.code.n());
    const std::uint32_t support_size = delta + 1;  // interpolation nodes for degree <= delta
    for (std::size_t i = 0; i < lc.code.n(); ++i) {
        const gf::elem x0 = lc.code.points[i].coords[0];
        const gf::elem y0 = lc.code.points[i].coords[1];
        for (gf::elem alpha = horizontal_groups ? 0 : 1; alpha < F.q(); ++alpha) {
            gf::elem beta = F.sub(y0, F.mul(alpha, x0));
            poly::UniPoly m = line_modulus(lines, alpha, beta);
            std::vector<gf::elem> ts;
            for (gf::elem t = 0; t < F.q(); ++t)
                if (t != x0 && m.eval(t) == 0) ts.push_back(t);
            if (ts.size() < support_size) continue;  // not enough survivors on this line
            ts.resize(support_size);
            recovery::RepairGroup g;
            g.target = i;
            for (gf::elem t : ts) {
                gf::elem y = F.add(F.mul(alpha, t), beta);
                auto it = index_of.find(static_cast<std::uint64_t>(t) * F.q() + y);
                if (it == index_of.end())
                    throw gf::field_error("line intersection point missing from the curve");
                g.support.push_back(it->second);
            }
            g.lambda = poly::lagrange_coeffs_at(F, ts, x0);
            lc.structure.groups[i].push_back(std::move(g));
        }
    }
    lc.realized_locality = lc.structure.locality();
    lc.realized_availability = lc.structure.availability();
    return lc;
}

}  // namespace

LiftedCode build_hermitian_lifted(std::uint32_t q) {
    if (q < 4 || (q & (q - 1)) != 0)
        throw gf::field_error("Hermitian-lifted construction needs q >= 4 a power of 2");
    LineFamily lines = hermitian_lines(q);
    curve_cover::HermitianCurve curve =
        curve_cover::hermitian_points(q, curve_cover::HermitianForm::y_form);
    // tangent lines meet the curve only once and drop out on survivor
    // count; the horizontal secant through each x != 0 point stands in,
    // giving q^2 - 1 pairwise-disjoint groups per coordinate
    return build_lifted(lines, curve.affine_points, q - 1, /*horizontal_groups=*/true);
}

NormTraceCurve norm_trace_curve(std::uint32_t r) {
    if (r < 2 || (1u << r) > (1u << 16))
        throw gf::field_error("norm-trace degree r out of range");
    NormTraceCurve curve;
    curve.r = r;
    curve.field = gf::Field::make(2, r);
    const auto& F = *curve.field;
    const std::uint32_t n = 1u << r;
    std::vector<std::vector<gf::elem>> by_trace(2);
    for (gf::elem y = 0; y < n; ++y) by_trace[F.trace(y, 1)].push_back(y);
    std::vector<std::pair<gf::elem, gf::elem>> pts;
    for (gf::elem x = 0; x < n; ++x) {
        gf::elem rhs = F.pow(x, n - 1);  // norm to GF(2): 0 at 0, else 1
        for (gf::elem y : by_trace[rhs]) pts.emplace_back(x, y);
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    });
    curve.affine_points = std::move(pts);
    if (curve.affine_points.size() != (1u << (2 * r - 1)))
        throw gf::field_error("norm-trace point count mismatch");
    return curve;
}

LiftedCode build_nt_lifted(std::uint32_t r, DeltaConvention convention) {
    if (r < 3 || r > 6) throw gf::field_error("norm-trace lifted codes support r in [3, 6]");
    LineFamily lines = norm_trace_lines(r);
    NormTraceCurve curve = norm_trace_curve(r);
    std::uint32_t delta = (1u << (r - 1)) - 2;
    if (convention == DeltaConvention::interpolation_consistent) delta -= 1;
    // horizontal lines are kept out of the recovery family: good monomials
    // are only guaranteed low-degree on non-horizontal lines here
    return build_lifted(lines, curve.affine_points, delta, /*horizontal_groups=*/false);
}

std::vector<std::size_t> line_intersection_counts(const LineFamily& lines) {
    const auto& F = *lines.field;
    std::vector<std::size_t> counts;
    for (gf::elem alpha = 1; alpha < F.q(); ++alpha)
        for (gf::elem beta = 0; beta < F.q(); ++beta) {
            poly::UniPoly m = line_modulus(lines, alpha, beta);
            std::size_t c = 0;
            for (gf::elem t = 0; t < F.q(); ++t)
                if (m.eval(t) == 0) ++c;
            counts.push_back(c);
        }
    return counts;
}

}  // namespace lrc::lifted
