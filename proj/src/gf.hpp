// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_GF_HPP
#define LRC_GF_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc::gf {

// Elements of GF(p^m) are identified with integers in [0, q): the code
// c0 + c1*p + ... + c_{m-1}*p^{m-1} stands for the polynomial-basis
// coefficient vector (c0, ..., c_{m-1}).  Code order is the canonical
// enumeration order.
using elem = std::uint32_t;

constexpr std::uint64_t kMaxOrder = 1u << 20;  // desk-scale guard

class field_error : public std::runtime_error {
public:
    explicit field_error(const std::string& what) : std::runtime_error(what) {}
};

class Field {
public:
    // Constructs GF(p^m) with the lexicographically-smallest monic
    // irreducible modulus of degree m over GF(p) (coefficients compared
    // low-degree-first).  Deterministic across runs.
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m);

    // As above but with a caller-supplied monic modulus (low-degree-first,
    // length m+1).  Irreducibility is checked.
    static std::shared_ptr<const Field> make_with_modulus(std::uint32_t p, std::uint32_t m,
                                                          std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }

    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const;
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;        // throws on 0
    elem div(elem a, elem b) const;
    elem pow(elem a, long long e) const;

    // x + x^s + x^{s^2} + ... with s = p^sub_degree; lands in the subfield
    // GF(p^sub_degree).  sub_degree must divide m.
    elem trace(elem x, std::uint32_t sub_degree) const;
    // x^{(q-1)/(p^sub_degree - 1)} for x != 0; norm(0) = 0.
    elem norm(elem x, std::uint32_t sub_degree) const;

    bool in_subfield(elem x, std::uint32_t sub_degree) const;

    // Multiplicative generator of GF(q)^* (smallest code with full order).
    elem generator() const { return generator_; }

    std::vector<std::uint32_t> coeffs(elem a) const;  // base-p digits, low first
    elem from_coeffs(const std::vector<std::uint32_t>& c) const;

    // All q elements in canonical (code) order.
    std::vector<elem> enumerate() const;

    bool same(const Field& other) const { return this == &other; }

    std::string describe() const;  // e.g. "GF(729) = GF(3^6)"

private:
    Field() = default;
    void build_tables();
    elem raw_mul(elem a, elem b) const;  // polynomial mul mod modulus, no tables

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    elem generator_ = 0;
    std::vector<std::uint32_t> log_;  // log_[a] for a in [1,q); log_[0] unused
    std::vector<elem> exp_;           // exp_[i] for i in [0, 2(q-1)); wraps mod q-1
};

using FieldPtr = std::shared_ptr<const Field>;

// Value-semantic element carrying its field; convenience layer over codes.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr f, elem code) : field_(std::move(f)), code_(code) {}

    elem code() const { return code_; }
    const FieldPtr& field() const { return field_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.field_, a.field_->add(a.code_, b.code_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.field_, a.field_->sub(a.code_, b.code_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.field_, a.field_->mul(a.code_, b.code_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {a.field_, a.field_->div(a.code_, b.code_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(code_)}; }
    FieldElement inv() const { return {field_, field_->inv(code_)}; }
    FieldElement pow(long long e) const { return {field_, field_->pow(code_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_.get() == b.field_.get() && a.code_ == b.code_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    void check(const FieldElement& other) const {
        if (field_.get() != other.field_.get()) throw field_error("cross-field operands");
    }
    FieldPtr field_;
    elem code_ = 0;
};

bool is_prime(std::uint64_t n);

// q = p^e with p prime; throws when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q);

}  // namespace lrc::gf

#endif
