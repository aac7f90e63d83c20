#pragma once

/**
 * @file homfly.hpp
 * @brief HOMFLYPT polynomial of closed positive braids.
 *
 * Skein convention: v^{-1} P(L+) - v P(L-) = z P(L0), unknot = 1.
 *
 * A positive word is expanded in the simple-braid basis; each simple closure
 * is evaluated by peeling strands off the top:
 *  - identity on n strands: n unlinked circles, delta^{n-1};
 *  - a fixes n: one split circle, delta times the closure on n-1 strands;
 *  - otherwise T_a = T_{a'} s_{n-1} ... s_k destabilizes to a positive word
 *    on n-1 strands, which re-enters the general evaluation.
 * The strand count drops on every re-entry, so the recursion depth is n.
 */

#include "braid.hpp"
#include "laurent.hpp"
#include "resolve.hpp"

#include <map>
#include <unordered_map>
#include <utility>

namespace posbraid {

/// Memoizing evaluator. Not thread-safe; use one per thread.
class HomflyEvaluator {
public:
    Laurent2 simple_closure(const Permutation& a) {
        if (auto it = simple_cache_.find(a); it != simple_cache_.end()) return it->second;

        const int n = a.size();
        Laurent2 result;
        if (a.is_identity()) {
            result = delta_power(n - 1);
        } else if (a(n) == n) {
            result = delta() * simple_closure(restrict_last(a));
        } else {
            const auto d = destabilize_simple(a);
            result = positive_closure(concat(reduced_word(d.reduced), d.tail));
        }
        simple_cache_.emplace(a, result);
        return result;
    }

    Laurent2 positive_closure(const BraidWord& w) {
        auto key = std::make_pair(w.strands(), w.letters());
        if (auto it = word_cache_.find(key); it != word_cache_.end()) return it->second;

        Laurent2 result;
        for (const auto& [a, c] : hecke_decompose_iterative(w)) result += c * simple_closure(a);
        word_cache_.emplace(std::move(key), result);
        return result;
    }

    Laurent2 closure_of(const HeckeDecomposition& d) {
        Laurent2 result;
        for (const auto& [a, c] : d) result += c * simple_closure(a);
        return result;
    }

    void clear() {
        simple_cache_.clear();
        word_cache_.clear();
    }

private:
    std::unordered_map<Permutation, Laurent2, PermutationHash> simple_cache_;
    std::map<std::pair<int, std::vector<int>>, Laurent2> word_cache_;
};

inline HomflyEvaluator& thread_evaluator() {
    thread_local HomflyEvaluator evaluator;
    return evaluator;
}

inline Laurent2 homfly_simple_closure(const Permutation& a) { return thread_evaluator().simple_closure(a); }

inline Laurent2 homfly_simple_closure(const Permutation& a, int n) {
    if (a.size() != n) throw precondition_error("homfly_simple_closure: permutation is not in S_n");
    return homfly_simple_closure(a);
}

inline Laurent2 homfly_positive_closure(const BraidWord& w) { return thread_evaluator().positive_closure(w); }

} // namespace posbraid
