#pragma once

/**
 * @file mfw.hpp
 * @brief Morton-Franks-Williams bounds and sharpness, plus braid index on 3 strands.
 *
 * For a positive word of writhe w on n strands the lower bound w-n+1 is
 * always attained, so the bound is sharp exactly when the top v-degree is
 * w+n-1, which in turn happens exactly when a simple resolution tree has an
 * identity leaf.
 */

#include "braid.hpp"
#include "homfly.hpp"
#include "laurent.hpp"
#include "resolve.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace posbraid {

struct MfwReport {
    int lower = 0;   ///< w - n + 1
    int upper = 0;   ///< w + n - 1
    int dv_min = 0;
    int dv_max = 0;
    int mfw = 0;     ///< span_v / 2 + 1
    bool sharp = false;

    bool operator==(const MfwReport&) const = default;
};

inline MfwReport mfw_report(const BraidWord& w) {
    const Laurent2 p = homfly_positive_closure(w);
    const auto [lo, hi] = v_degree_bounds(p);
    MfwReport r;
    r.lower = w.writhe() - w.strands() + 1;
    r.upper = w.writhe() + w.strands() - 1;
    r.dv_min = lo;
    r.dv_max = hi;
    r.mfw = (hi - lo) / 2 + 1;
    r.sharp = hi == r.upper;
    if (r.dv_min != r.lower || (hi - lo) % 2 != 0 || hi > r.upper) {
        throw std::logic_error("mfw_report: HOMFLYPT degrees violate the MFW bounds for a positive word");
    }
    return r;
}

/// True iff the simple resolution tree has an identity leaf.
inline bool is_mfw_sharp(const BraidWord& w) {
    return hecke_decompose_iterative(w).contains(Permutation::identity(w.strands()));
}

// Certificates ----------------------------------------------------------------

struct InsertSquare {
    int generator = 0;
    std::size_t position = 0;
    bool operator==(const InsertSquare&) const = default;
};

struct DoubleLetter {
    std::size_t position = 0;
    bool operator==(const DoubleLetter&) const = default;
};

struct BraidRelation {
    std::size_t position = 0;
    RelationKind kind = RelationKind::Commute;
    bool operator==(const BraidRelation&) const = default;
};

using CertificateStep = std::variant<InsertSquare, DoubleLetter, BraidRelation>;

/// A way to build a word from the empty word by the three sharpness-preserving moves.
struct Certificate {
    int strands = 1;
    std::vector<CertificateStep> steps;
};

inline BraidWord apply_step(const BraidWord& w, const CertificateStep& step) {
    std::vector<int> x = w.letters();
    if (const auto* ins = std::get_if<InsertSquare>(&step)) {
        if (ins->position > x.size()) throw precondition_error("InsertSquare: position out of range");
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(ins->position), 2, ins->generator);
        return BraidWord(w.strands(), std::move(x));
    }
    if (const auto* dbl = std::get_if<DoubleLetter>(&step)) {
        if (dbl->position >= x.size()) throw precondition_error("DoubleLetter: position out of range");
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(dbl->position), x[dbl->position]);
        return BraidWord(w.strands(), std::move(x));
    }
    const auto& rel = std::get<BraidRelation>(step);
    return apply_move(w, RelationMove{rel.position, rel.kind});
}

inline BraidWord replay(const Certificate& cert) {
    BraidWord w(cert.strands);
    for (const auto& step : cert.steps) w = apply_step(w, step);
    return w;
}

namespace detail {

// Alternating word in {s, t} of length m whose last letter is `last`.
inline std::vector<int> alternating(int s, int t, int m, int last) {
    std::vector<int> out(static_cast<std::size_t>(m));
    int cur = last;
    for (int k = m - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = cur;
        cur = (cur == s) ? t : s;
    }
    return out;
}

// Positive braid moves turning reduced word `from` into reduced word `to`
// (same permutation). Positions index into the word, so they remain valid
// when the words are prefixes of a longer word.
inline void relation_moves(const BraidWord& from, const BraidWord& to, std::vector<RelationMove>& out) {
    if (from.length() != to.length()) throw std::logic_error("relation_moves: length mismatch");
    auto len = from.length();
    while (len > 0 && from[len - 1] == to[len - 1]) --len;
    if (len == 0) return;
    const BraidWord x = subword(from, 0, len);
    const BraidWord y = subword(to, 0, len);

    const int t = x[len - 1];
    const int s = y[len - 1];
    const int m = std::abs(s - t) >= 2 ? 2 : 3;

    // Both s and t are right descents, so the word can end in the longest
    // element of <s, t>; build such a word ending in t, flip it, finish.
    const auto tail_t = alternating(s, t, m, t);
    Permutation rest = perm_of_word(x);
    for (auto it = tail_t.rbegin(); it != tail_t.rend(); ++it) rest = rest.times_generator(*it);
    if (rest.length() + m != static_cast<int>(len)) {
        throw std::logic_error("relation_moves: words do not represent the same simple braid");
    }
    const BraidWord base = reduced_word(rest);
    const BraidWord via_t = concat(base, BraidWord(x.strands(), tail_t));
    const BraidWord via_s = concat(base, BraidWord(x.strands(), alternating(s, t, m, s)));

    relation_moves(subword(x, 0, len - 1), subword(via_t, 0, len - 1), out);
    out.push_back(RelationMove{len - static_cast<std::size_t>(m),
                               m == 2 ? RelationKind::Commute : RelationKind::Braid});
    relation_moves(via_s, y, out);
}

} // namespace detail

/// Root-to-identity-leaf path of the first-descent tree, read backwards as
/// insertions or doublings followed by braid relations. Replays to the input word itself.
inline std::optional<Certificate> sharpness_certificate(const BraidWord& w) {
    const Permutation id = Permutation::identity(w.strands());
    if (!hecke_decompose_iterative(w).contains(id)) return std::nullopt;

    struct PathStep {
        SquareSplit split;
        BraidWord node;
        bool left;
    };
    std::vector<PathStep> path;
    BraidWord node = w;
    while (auto split = find_square_split(node)) {
        const BraidWord left = left_child_word(*split);
        const bool go_left = hecke_decompose_iterative(left).contains(id);
        BraidWord child = go_left ? left : right_child_word(*split);
        path.push_back(PathStep{*split, node, go_left});
        node = std::move(child);
    }
    if (!node.empty()) throw std::logic_error("sharpness_certificate: path does not end at the identity");

    Certificate cert{w.strands(), {}};
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const auto& sp = it->split;
        const auto at = sp.prefix.length();
        if (it->left) {
            cert.steps.emplace_back(InsertSquare{sp.generator, at});
        } else {
            cert.steps.emplace_back(DoubleLetter{at});
        }
        std::vector<RelationMove> moves;
        detail::relation_moves(append_letter(sp.prefix, sp.generator), subword(it->node, 0, sp.scanned), moves);
        for (const auto& m : moves) cert.steps.emplace_back(BraidRelation{m.position, m.kind});
    }
    return cert;
}

// Word families with known sharp closures -------------------------------------

enum class SharpFamily {
    AllExponentsAtLeastTwo,
    EvenPalindrome,
    ContainsDeltaSquared,
};

inline std::string to_string(SharpFamily f) {
    switch (f) {
    case SharpFamily::AllExponentsAtLeastTwo: return "AllExponentsAtLeastTwo";
    case SharpFamily::EvenPalindrome: return "EvenPalindrome";
    case SharpFamily::ContainsDeltaSquared: return "ContainsDeltaSquared";
    }
    return "?";
}

/// Every maximal run of one generator has length >= 2, reading the word cyclically.
inline bool all_cyclic_runs_at_least_two(const BraidWord& w) {
    const auto& x = w.letters();
    const auto len = x.size();
    if (len == 0) return true;
    if (std::all_of(x.begin(), x.end(), [&](int g) { return g == x[0]; })) return len >= 2;

    std::size_t start = 0;
    while (x[start] == x[(start + len - 1) % len]) ++start;
    std::size_t run = 0;
    for (std::size_t k = 0; k < len; ++k) {
        const auto cur = x[(start + k) % len];
        const auto next = x[(start + k + 1) % len];
        ++run;
        if (cur != next) {
            if (run < 2) return false;
            run = 0;
        }
    }
    return true;
}

inline bool is_even_palindrome(const BraidWord& w) {
    return w.length() % 2 == 0 && reverse_word(w) == w;
}

/// Breadth-first search over positive-relation rewritings, up to `depth`
/// moves, for the word half_twist_word(n)^2 as a contiguous factor.
inline bool contains_delta_squared(const BraidWord& w, int depth = 3) {
    const BraidWord ht = half_twist_word(w.strands());
    const BraidWord target = concat(ht, ht);
    auto has_factor = [&](const BraidWord& u) {
        return std::search(u.letters().begin(), u.letters().end(), target.letters().begin(),
                           target.letters().end()) != u.letters().end();
    };

    std::set<std::vector<int>> seen{w.letters()};
    std::deque<std::pair<BraidWord, int>> queue{{w, 0}};
    while (!queue.empty()) {
        auto [u, d] = queue.front();
        queue.pop_front();
        if (has_factor(u)) return true;
        if (d == depth) continue;
        for (const auto& m : applicable_moves(u)) {
            BraidWord next = apply_move(u, m);
            if (seen.insert(next.letters()).second) queue.emplace_back(std::move(next), d + 1);
        }
    }
    return false;
}

/// A sufficient syntactic condition for sharpness; none means "not recognized".
inline std::optional<SharpFamily> corollary6_family(const BraidWord& w, int delta_search_depth = 3) {
    if (all_cyclic_runs_at_least_two(w)) return SharpFamily::AllExponentsAtLeastTwo;
    if (is_even_palindrome(w)) return SharpFamily::EvenPalindrome;
    if (contains_delta_squared(w, delta_search_depth)) return SharpFamily::ContainsDeltaSquared;
    return std::nullopt;
}

// Three strands -----------------------------------------------------------------

enum class ThreeStrandFamilyKind {
    Family1,  ///< s_a s_b^p, p >= 0
    Family2,  ///< s_a s_b s_a^p s_b^q, p, q > 0
};

struct ThreeStrandFamily {
    ThreeStrandFamilyKind kind = ThreeStrandFamilyKind::Family1;
    int leading = 1;        ///< a: 1 or 2
    int p = 0;
    int q = 0;              ///< Family2 only
    std::size_t shift = 0;  ///< cyclic shift at which the pattern was found

    bool operator==(const ThreeStrandFamily&) const = default;
};

inline std::string to_string(const ThreeStrandFamily& f) {
    if (f.kind == ThreeStrandFamilyKind::Family1) return "Family1(p=" + std::to_string(f.p) + ")";
    return "Family2(p=" + std::to_string(f.p) + ",q=" + std::to_string(f.q) + ")";
}

namespace detail {

inline void require_three_strands(const BraidWord& w) {
    if (w.strands() != 3) throw precondition_error("not a 3-strand word");
}

inline std::optional<ThreeStrandFamily> match_rotation(const std::vector<int>& x) {
    if (x.empty()) return std::nullopt;
    const int a = x[0];
    const int b = 3 - a;
    const auto len = x.size();

    if (std::all_of(x.begin() + 1, x.end(), [&](int g) { return g == b; })) {
        return ThreeStrandFamily{ThreeStrandFamilyKind::Family1, a, static_cast<int>(len) - 1, 0, 0};
    }
    if (len >= 4 && x[1] == b) {
        std::size_t k = 2;
        while (k < len && x[k] == a) ++k;
        const auto p = k - 2;
        const auto q = len - k;
        if (p > 0 && q > 0 && std::all_of(x.begin() + static_cast<std::ptrdiff_t>(k), x.end(),
                                          [&](int g) { return g == b; })) {
            return ThreeStrandFamily{ThreeStrandFamilyKind::Family2, a, static_cast<int>(p), static_cast<int>(q), 0};
        }
    }
    return std::nullopt;
}

} // namespace detail

/// The braid-index-below-three families, matched up to cyclic permutation.
inline std::optional<ThreeStrandFamily> match_three_strand_family(const BraidWord& w) {
    detail::require_three_strands(w);
    for (std::size_t s = 0; s < w.length(); ++s) {
        if (auto f = detail::match_rotation(cyclic_shift(w, static_cast<long long>(s)).letters())) {
            f->shift = s;
            return f;
        }
    }
    return std::nullopt;
}

/// p such that the input is conjugate to s_1^p s_2, when it has index below three.
inline std::optional<int> conjugation_normal_form3(const BraidWord& w) {
    const auto f = match_three_strand_family(w);
    if (!f) return std::nullopt;
    return f->kind == ThreeStrandFamilyKind::Family1 ? f->p : f->p + f->q + 1;
}

inline BraidWord normal_form_word3(int p) {
    std::vector<int> letters(static_cast<std::size_t>(p), 1);
    letters.push_back(2);
    return BraidWord(3, std::move(letters));
}

inline std::string normal_form_text(int p) {
    if (p == 0) return "s2";
    if (p == 1) return "s1 s2";
    return "s1^" + std::to_string(p) + " s2";
}

struct Classification3 {
    int index = 3;
    std::optional<ThreeStrandFamily> family;
    std::optional<int> normal_form;
};

/// Braid index of a closed positive 3-braid (equal to its MFW bound).
inline Classification3 classify3(const BraidWord& w) {
    detail::require_three_strands(w);
    Classification3 c;
    if (w.empty()) return c;  // three unlinked circles
    c.index = mfw_report(w).mfw;
    c.family = match_three_strand_family(w);
    c.normal_form = conjugation_normal_form3(w);
    return c;
}

} // namespace posbraid
