// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "poly.hpp"

#include <algorithm>

namespace lrc::poly {

UniPoly::UniPoly(gf::FieldPtr f, std::vector<gf::elem> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::monomial(gf::FieldPtr f, std::uint32_t e, gf::elem c) {
    std::vector<gf::elem> cs(e + 1, 0);
    cs[e] = c;
    return UniPoly(std::move(f), std::move(cs));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const auto& F = *a.field_;
    std::vector<gf::elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return UniPoly(a.field_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    const auto& F = *a.field_;
    std::vector<gf::elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
    return UniPoly(a.field_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.field_);
    const auto& F = *a.field_;
    std::vector<gf::elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return UniPoly(a.field_, std::move(c));
}

UniPoly UniPoly::scaled(gf::elem c) const {
    std::vector<gf::elem> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
    return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::pow(std::uint64_t e) const {
    UniPoly r = UniPoly::constant(field_, 1);
    UniPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

gf::elem UniPoly::eval(gf::elem x) const {
    const auto& F = *field_;
    gf::elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs_[i]);
    return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw gf::field_error("polynomial division by zero");
    const auto& F = *f.field();
    if (f.degree() < g.degree()) return {UniPoly::zero(f.field()), f};
    std::vector<gf::elem> r = f.coeffs();
    const auto& gc = g.coeffs();
    const gf::elem linv = F.inv(g.lead());
    const int dg = g.degree();
    std::vector<gf::elem> q(f.degree() - dg + 1, 0);
    for (int d = f.degree(); d >= dg; --d) {
        gf::elem c = F.mul(r[d], linv);
        if (c != 0) {
            int shift = d - dg;
            q[shift] = c;
            for (std::size_t i = 0; i < gc.size(); ++i)
                r[shift + i] = F.sub(r[shift + i], F.mul(c, gc[i]));
        }
    }
    return {UniPoly(f.field(), std::move(q)), UniPoly(f.field(), std::move(r))};
}

UniPoly mod(const UniPoly& f, const UniPoly& g) { return divmod(f, g).second; }

UniPoly lagrange(gf::FieldPtr fp, const std::vector<std::pair<gf::elem, gf::elem>>& points) {
    if (points.empty()) throw gf::field_error("interpolation needs at least one point");
    const auto& F = *fp;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw gf::field_error("duplicate interpolation abscissa");
    UniPoly acc = UniPoly::zero(fp);
    for (std::size_t i = 0; i < points.size(); ++i) {
        UniPoly basis = UniPoly::constant(fp, 1);
        gf::elem denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(fp, {F.neg(points[j].first), 1});
            denom = F.mul(denom, F.sub(points[i].first, points[j].first));
        }
        acc = acc + basis.scaled(F.div(points[i].second, denom));
    }
    return acc;
}

std::vector<gf::elem> lagrange_coeffs_at(const gf::Field& F, const std::vector<gf::elem>& nodes,
                                         gf::elem x0) {
    std::vector<gf::elem> lambda(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        gf::elem num = 1, den = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            num = F.mul(num, F.sub(x0, nodes[j]));
            den = F.mul(den, F.sub(nodes[i], nodes[j]));
        }
        lambda[i] = F.div(num, den);
    }
    return lambda;
}

std::vector<gf::elem> roots(const UniPoly& f) {
    if (f.is_zero()) throw gf::field_error("roots of the zero polynomial");
    std::vector<gf::elem> out;
    const auto& F = *f.field();
    for (gf::elem x = 0; x < F.q(); ++x)
        if (f.eval(x) == 0) out.push_back(x);
    return out;
}

}  // namespace lrc::poly
