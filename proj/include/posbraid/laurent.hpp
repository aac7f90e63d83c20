#pragma once

/**
 * @file laurent.hpp
 * @brief Sparse integer Laurent polynomials in two commuting variables v, z.
 *
 * A Laurent2 is kept in canonical form: terms sorted by v-exponent
 * descending, then z-exponent descending, no repeated monomials and no zero
 * coefficients. Two values are equal iff their term lists are identical.
 *
 * Coefficients are 64-bit; every addition and multiplication is checked and
 * throws std::overflow_error rather than wrapping.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posbraid {

struct Monomial {
    int v = 0;
    int z = 0;

    auto operator<=>(const Monomial&) const = default;
};

struct Term {
    Monomial m;
    std::int64_t c = 0;

    bool operator==(const Term&) const = default;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("Laurent2: coefficient overflow in addition");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("Laurent2: coefficient overflow in multiplication");
    }
    return r;
}

inline int checked_exponent(long long e) {
    if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min()) {
        throw std::overflow_error("Laurent2: exponent overflow");
    }
    return static_cast<int>(e);
}

// v descending, then z descending
inline bool canonical_before(const Monomial& a, const Monomial& b) {
    return a.v != b.v ? a.v > b.v : a.z > b.z;
}

} // namespace detail

class Laurent2 {
public:
    Laurent2() = default;

    static Laurent2 constant(std::int64_t c) { return monomial(c, 0, 0); }

    static Laurent2 monomial(std::int64_t c, int dv, int dz) {
        Laurent2 p;
        if (c != 0) p.terms_.push_back(Term{{dv, dz}, c});
        return p;
    }

    // Accepts terms in any order, with repeats and zeros.
    static Laurent2 from_terms(std::vector<Term> terms) {
        Laurent2 p;
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::int64_t coeff(int dv, int dz) const {
        const Monomial key{dv, dz};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, const Monomial& m) {
                                       return detail::canonical_before(t.m, m);
                                   });
        return (it != terms_.end() && it->m == key) ? it->c : 0;
    }

    /// Multiply by the monomial v^dv z^dz.
    Laurent2 shifted(int dv, int dz) const {
        Laurent2 p = *this;
        for (auto& t : p.terms_) {
            t.m.v = detail::checked_exponent(static_cast<long long>(t.m.v) + dv);
            t.m.z = detail::checked_exponent(static_cast<long long>(t.m.z) + dz);
        }
        return p;
    }

    /// Specialize v = 1; the result only has z-exponents.
    Laurent2 at_v_one() const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back(Term{{0, t.m.z}, t.c});
        return from_terms(std::move(out));
    }

    bool operator==(const Laurent2&) const = default;

    Laurent2 operator-() const {
        Laurent2 p = *this;
        for (auto& t : p.terms_) t.c = detail::checked_mul(t.c, -1);
        return p;
    }

    friend Laurent2 operator+(const Laurent2& p, const Laurent2& q) {
        Laurent2 r;
        r.terms_.reserve(p.terms_.size() + q.terms_.size());
        auto a = p.terms_.begin();
        auto b = q.terms_.begin();
        while (a != p.terms_.end() || b != q.terms_.end()) {
            if (b == q.terms_.end() || (a != p.terms_.end() && detail::canonical_before(a->m, b->m))) {
                r.terms_.push_back(*a++);
            } else if (a == p.terms_.end() || detail::canonical_before(b->m, a->m)) {
                r.terms_.push_back(*b++);
            } else {
                const auto c = detail::checked_add(a->c, b->c);
                if (c != 0) r.terms_.push_back(Term{a->m, c});
                ++a;
                ++b;
            }
        }
        return r;
    }

    friend Laurent2 operator-(const Laurent2& p, const Laurent2& q) { return p + (-q); }

    friend Laurent2 operator*(const Laurent2& p, const Laurent2& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Term> prod;
        prod.reserve(p.terms_.size() * q.terms_.size());
        for (const auto& s : p.terms_) {
            for (const auto& t : q.terms_) {
                prod.push_back(Term{{detail::checked_exponent(static_cast<long long>(s.m.v) + t.m.v),
                                     detail::checked_exponent(static_cast<long long>(s.m.z) + t.m.z)},
                                    detail::checked_mul(s.c, t.c)});
            }
        }
        return from_terms(std::move(prod));
    }

    Laurent2& operator+=(const Laurent2& q) { return *this = *this + q; }
    Laurent2& operator-=(const Laurent2& q) { return *this = *this - q; }
    Laurent2& operator*=(const Laurent2& q) { return *this = *this * q; }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return detail::canonical_before(a.m, b.m); });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!merged.empty() && merged.back().m == t.m) {
                merged.back().c = detail::checked_add(merged.back().c, t.c);
            } else {
                merged.push_back(t);
            }
        }
        std::erase_if(merged, [](const Term& t) { return t.c == 0; });
        terms_ = std::move(merged);
    }

    std::vector<Term> terms_;
};

inline Laurent2 add(const Laurent2& p, const Laurent2& q) { return p + q; }
inline Laurent2 mul(const Laurent2& p, const Laurent2& q) { return p * q; }

/// The per-circle factor (v^{-1} - v) / z.
inline Laurent2 delta() {
    return Laurent2::from_terms({Term{{-1, -1}, 1}, Term{{1, -1}, -1}});
}

inline Laurent2 delta_power(int k) {
    if (k < 0) throw std::invalid_argument("delta_power: negative exponent");
    Laurent2 r = Laurent2::constant(1);
    const Laurent2 d = delta();
    for (int i = 0; i < k; ++i) r *= d;
    return r;
}

/// (-z)^k for any integer k.
inline Laurent2 minus_z_power(int k) {
    return Laurent2::monomial((k % 2 == 0) ? 1 : -1, 0, k);
}

struct VDegreeBounds {
    int min_dv = 0;
    int max_dv = 0;

    bool operator==(const VDegreeBounds&) const = default;
};

inline VDegreeBounds v_degree_bounds(const Laurent2& p) {
    if (p.is_zero()) throw std::domain_error("v_degree_bounds: zero polynomial");
    // canonical order puts the highest v first and the lowest v last
    return {p.terms().back().m.v, p.terms().front().m.v};
}

/// All terms with v-exponent dv, moved to v^0.
inline Laurent2 coeff_of_v(const Laurent2& p, int dv) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.m.v == dv) out.push_back(Term{{0, t.m.z}, t.c});
    }
    return Laurent2::from_terms(std::move(out));
}

/// Canonical text, e.g. `-v^4 + v^2*z^2 + 2*v^2`; the zero polynomial is `0`.
inline std::string to_string(const Laurent2& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.c < 0;
        const std::uint64_t magnitude =
            negative ? static_cast<std::uint64_t>(-(t.c + 1)) + 1u : static_cast<std::uint64_t>(t.c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::vector<std::string> factors;
        const bool is_constant = t.m.v == 0 && t.m.z == 0;
        if (magnitude != 1 || is_constant) factors.push_back(std::to_string(magnitude));
        if (t.m.v != 0) factors.push_back("v^" + std::to_string(t.m.v));
        if (t.m.z != 0) factors.push_back("z^" + std::to_string(t.m.z));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += '*';
            out += factors[i];
        }
    }
    return out;
}

} // namespace posbraid
