// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lrc::gf {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
    if (q < 2) throw field_error("not a prime power");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint64_t v = 1;
    while (v < q) { v *= p; ++e; }
    if (v != q) throw field_error(std::to_string(q) + " is not a prime power");
    return {p, e};
}

namespace {

// Dense polynomials over GF(p), low-degree-first, used only for modulus
// search and bootstrap multiplication.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    // mod is monic
    const std::size_t dm = mod.size() - 1;
    while (r.size() > dm) {
        std::uint32_t lead = r.back();
        std::size_t shift = r.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t i = 0; i <= dm; ++i)
                r[shift + i] = (r[shift + i] + (p - 1) * lead % p * mod[i]) % p;
        r.pop_back();
        trim(r);
    }
    return r;
}

Poly poly_xpowmod(std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly result{1};
    Poly base{0, 1};
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    auto inv_mod_p = [p](std::uint32_t x) {
        std::uint32_t r = 1;
        for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
        }
        return r;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint32_t binv = inv_mod_p(b.back());
        while (a.size() >= b.size()) {
            std::uint32_t c = a.back() * binv % p;
            std::size_t shift = a.size() - b.size();
            if (c != 0)
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
            a.pop_back();
            trim(a);
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
        trim(b);
    }
    return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(static_cast<std::uint32_t>(n));
    return fs;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    // Rabin test: x^{p^m} == x mod f, and gcd(x^{p^{m/l}} - x, f) = 1 for
    // every prime l | m.
    auto pow_u64 = [](std::uint64_t b, std::uint32_t e) {
        std::uint64_t r = 1;
        while (e--) r *= b;
        return r;
    };
    Poly x{0, 1};
    Poly top = poly_xpowmod(pow_u64(p, static_cast<std::uint32_t>(m)), f, p);
    Poly diff = top;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::uint32_t l : prime_factors(m)) {
        Poly sub = poly_xpowmod(pow_u64(p, static_cast<std::uint32_t>(m) / l), f, p);
        sub.resize(std::max<std::size_t>(sub.size(), 2), 0);
        sub[1] = (sub[1] + p - 1) % p;
        trim(sub);
        Poly g = poly_gcd(sub, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw field_error("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw field_error("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw field_error("field order exceeds 2^20 guard");
    }
    // Candidates ordered lexicographically on (c0, ..., c_{m-1}).
    Poly f(m + 1, 0);
    f[m] = 1;
    std::vector<std::uint32_t> c(m, 0);
    for (std::uint64_t v = 0;; ++v) {
        if (v >= q) throw field_error("no irreducible modulus found");  // unreachable
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < m; ++i) {
            c[m - 1 - i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        for (std::uint32_t i = 0; i < m; ++i) f[i] = c[i];
        if (is_irreducible(f, p)) break;
    }
    return make_with_modulus(p, m, f);
}

std::shared_ptr<const Field> Field::make_with_modulus(std::uint32_t p, std::uint32_t m,
                                                      std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw field_error("characteristic is not prime");
    if (modulus.size() != m + 1 || modulus[m] != 1)
        throw field_error("modulus must be monic of degree m");
    if (!is_irreducible(modulus, p)) throw field_error("modulus is reducible");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    if (q > kMaxOrder) throw field_error("field order exceeds 2^20 guard");
    f->q_ = static_cast<std::uint32_t>(q);
    f->modulus_ = std::move(modulus);
    f->build_tables();
    return f;
}

elem Field::raw_mul(elem a, elem b) const {
    // base-p digit expansion, schoolbook product, reduce by modulus
    std::vector<std::uint32_t> da(m_), db(m_);
    elem t = a;
    for (std::uint32_t i = 0; i < m_; ++i) { da[i] = t % p_; t /= p_; }
    t = b;
    for (std::uint32_t i = 0; i < m_; ++i) { db[i] = t % p_; t /= p_; }
    std::vector<std::uint32_t> r(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            r[i + j] = (r[i + j] + da[i] * db[j]) % p_;
    }
    for (std::uint32_t d = 2 * m_ - 1; d >= m_; --d) {
        std::uint32_t lead = r[d];
        if (lead != 0) {
            std::uint32_t shift = d - m_;
            for (std::uint32_t i = 0; i <= m_; ++i)
                r[shift + i] = (r[shift + i] + (p_ - 1) * lead % p_ * modulus_[i]) % p_;
        }
        if (d == m_) break;
    }
    elem out = 0;
    for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + r[i];
    return out;
}

void Field::build_tables() {
    if (q_ == 2) {  // trivial multiplicative group
        generator_ = 1;
        log_.assign(2, 0);
        exp_.assign(2, 1);
        return;
    }
    auto raw_pow = [this](elem a, std::uint64_t e) {
        elem r = 1;
        while (e > 0) {
            if (e & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    const std::uint64_t ord = q_ - 1;
    auto factors = prime_factors(ord);
    generator_ = 0;
    for (elem cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (std::uint32_t f : factors)
            if (raw_pow(cand, ord / f) == 1) { ok = false; break; }
        if (ok) { generator_ = cand; break; }
    }
    if (generator_ == 0) throw field_error("no multiplicative generator found");
    log_.assign(q_, 0);
    exp_.assign(2 * ord, 0);
    elem x = 1;
    for (std::uint64_t i = 0; i < ord; ++i) {
        exp_[i] = x;
        exp_[i + ord] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = raw_mul(x, generator_);
    }
}

elem Field::add(elem a, elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

elem Field::neg(elem a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : q_ - a;
    elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

elem Field::sub(elem a, elem b) const { return add(a, neg(b)); }

elem Field::mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

elem Field::inv(elem a) const {
    if (a == 0) throw field_error("division by zero");
    if (a == 1) return 1;
    return exp_[q_ - 1 - log_[a]];
}

elem Field::div(elem a, elem b) const { return mul(a, inv(b)); }

elem Field::pow(elem a, long long e) const {
    if (a == 0) {
        if (e < 0) throw field_error("division by zero");
        return e == 0 ? 1 : 0;
    }
    const long long ord = q_ - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    if (r == 0) return 1;
    return exp_[static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r) % ord];
}

elem Field::trace(elem x, std::uint32_t sub_degree) const {
    if (sub_degree == 0 || m_ % sub_degree != 0)
        throw field_error("sub_degree must divide extension degree");
    elem acc = 0, t = x;
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < sub_degree; ++i) s *= p_;
    for (std::uint32_t i = 0; i < m_ / sub_degree; ++i) {
        acc = add(acc, t);
        t = pow(t, static_cast<long long>(s));
    }
    return acc;
}

elem Field::norm(elem x, std::uint32_t sub_degree) const {
    if (sub_degree == 0 || m_ % sub_degree != 0)
        throw field_error("sub_degree must divide extension degree");
    if (x == 0) return 0;
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < sub_degree; ++i) s *= p_;
    return pow(x, static_cast<long long>((q_ - 1) / (s - 1)));
}

bool Field::in_subfield(elem x, std::uint32_t sub_degree) const {
    std::uint64_t s = 1;
    for (std::uint32_t i = 0; i < sub_degree; ++i) s *= p_;
    return pow(x, static_cast<long long>(s)) == x;
}

std::vector<std::uint32_t> Field::coeffs(elem a) const {
    std::vector<std::uint32_t> c(m_);
    for (std::uint32_t i = 0; i < m_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
}

elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != m_) throw field_error("coefficient vector has wrong length");
    elem out = 0;
    for (std::uint32_t i = m_; i-- > 0;) {
        if (c[i] >= p_) throw field_error("coefficient out of range");
        out = out * p_ + c[i];
    }
    return out;
}

std::vector<elem> Field::enumerate() const {
    std::vector<elem> v(q_);
    std::iota(v.begin(), v.end(), 0u);
    return v;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (m_ > 1) os << " = GF(" << p_ << "^" << m_ << ")";
    return os.str();
}

}  // namespace lrc::gf
