#pragma once

// Test-only oracles and random generators. Nothing here calls the resolution
// or Hecke machinery, so the checks built on it are independent of the code
// under test.

#include "posbraid/braid.hpp"
#include "posbraid/laurent.hpp"

#include <random>
#include <vector>

namespace posbraid::testing {

/// HOMFLYPT of the closure of sigma_1^k on two strands, straight from the
/// quadratic relation: P_k = vz P_{k-1} + v^2 P_{k-2}, P_0 = delta, P_1 = 1.
inline Laurent2 torus_two_oracle(int k) {
    const Laurent2 vz = Laurent2::monomial(1, 1, 1);
    const Laurent2 v2 = Laurent2::monomial(1, 2, 0);
    Laurent2 prev = Laurent2::from_terms({Term{{-1, -1}, 1}, Term{{1, -1}, -1}});
    Laurent2 cur = Laurent2::constant(1);
    if (k == 0) return prev;
    for (int j = 2; j <= k; ++j) {
        Laurent2 next = vz * cur + v2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Simulates the strands and counts crossings per pair; simple iff every
/// pair crosses at most once.
inline bool simple_by_crossing_count(const BraidWord& w) {
    const auto n = static_cast<std::size_t>(w.strands());
    std::vector<int> at(n);  // at[pos] = strand currently at position pos
    for (std::size_t k = 0; k < n; ++k) at[k] = static_cast<int>(k);
    std::vector<std::vector<int>> crossings(n, std::vector<int>(n, 0));
    for (int g : w.letters()) {
        auto& a = at[static_cast<std::size_t>(g - 1)];
        auto& b = at[static_cast<std::size_t>(g)];
        const auto lo = static_cast<std::size_t>(std::min(a, b));
        const auto hi = static_cast<std::size_t>(std::max(a, b));
        if (++crossings[lo][hi] > 1) return false;
        std::swap(a, b);
    }
    return true;
}

/// Permutation as start position -> end position by following each strand.
inline std::vector<int> images_by_simulation(const BraidWord& w) {
    const auto n = static_cast<std::size_t>(w.strands());
    std::vector<int> pos(n);
    for (std::size_t s = 0; s < n; ++s) pos[s] = static_cast<int>(s) + 1;
    for (int g : w.letters()) {
        for (auto& p : pos) {
            if (p == g) {
                p = g + 1;
            } else if (p == g + 1) {
                p = g;
            }
        }
    }
    return pos;
}

inline BraidWord random_word(std::mt19937_64& rng, int n, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::vector<int> letters(len_dist(rng));
    if (n >= 2) {
        std::uniform_int_distribution<int> gen(1, n - 1);
        for (auto& g : letters) g = gen(rng);
    } else {
        letters.clear();
    }
    return BraidWord(n, std::move(letters));
}

inline BraidWord random_relation_rewrite(std::mt19937_64& rng, BraidWord w, int steps) {
    for (int s = 0; s < steps; ++s) {
        const auto moves = applicable_moves(w);
        if (moves.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        w = apply_move(w, moves[pick(rng)]);
    }
    return w;
}

inline Laurent2 random_polynomial(std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Term> terms;
    for (int k = count(rng); k > 0; --k) terms.push_back(Term{{exp(rng), exp(rng)}, coeff(rng)});
    return Laurent2::from_terms(std::move(terms));
}

inline BraidWord word(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

inline Permutation perm(int n, std::vector<int> letters) { return perm_of_word(BraidWord(n, std::move(letters))); }

/// Monomial c v^a z^b.
inline Laurent2 mono(std::int64_t c, int a, int b) { return Laurent2::monomial(c, a, b); }

} // namespace posbraid::testing
