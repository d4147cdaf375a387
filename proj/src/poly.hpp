// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_POLY_HPP
#define LRC_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace lrc::poly {

// Univariate polynomial over a Field.  Coefficients are element codes,
// lowest degree first, no trailing zeros.  deg(0) = -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(gf::FieldPtr f, std::vector<gf::elem> coeffs);

    static UniPoly zero(gf::FieldPtr f) { return UniPoly(std::move(f), {}); }
    static UniPoly constant(gf::FieldPtr f, gf::elem c) { return UniPoly(std::move(f), {c}); }
    static UniPoly x(gf::FieldPtr f) { return UniPoly(std::move(f), {0, 1}); }
    // c * x^e
    static UniPoly monomial(gf::FieldPtr f, std::uint32_t e, gf::elem c = 1);

    const gf::FieldPtr& field() const { return field_; }
    const std::vector<gf::elem>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    gf::elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    gf::elem lead() const { return coeffs_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(gf::elem c) const;
    UniPoly pow(std::uint64_t e) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.field_.get() == b.field_.get() && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    gf::elem eval(gf::elem x) const;  // Horner

private:
    void trim();
    gf::FieldPtr field_;
    std::vector<gf::elem> coeffs_;
};

// f = q*g + r with deg r < deg g; throws on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
UniPoly mod(const UniPoly& f, const UniPoly& g);

// Unique polynomial of degree < #points through the given (x, y) pairs;
// throws on duplicate x.
UniPoly lagrange(gf::FieldPtr f, const std::vector<std::pair<gf::elem, gf::elem>>& points);

// Lagrange coefficients for evaluating at x0 the degree-(#nodes - 1)
// interpolant through the given nodes: value = sum lambda_i * y_i.
std::vector<gf::elem> lagrange_coeffs_at(const gf::Field& f, const std::vector<gf::elem>& nodes,
                                         gf::elem x0);

// All roots in the field, by exhaustive scan; throws on the zero polynomial.
std::vector<gf::elem> roots(const UniPoly& f);

}  // namespace lrc::poly

#endif
