#pragma once

/**
 * @file inner.hpp
 * @brief Kalman's inner product on the Hecke algebra, two ways.
 *
 * <a, b> is the coefficient of v^{w+n-1} in (-z)^{n-1} P(closure of a b*),
 * where b* is b read backwards and w is the total length. inner_product_def
 * evaluates that directly; inner_product_simple runs the length recursion on
 * pairs of simple braids and never touches a HOMFLYPT polynomial.
 */

#include "braid.hpp"
#include "homfly.hpp"
#include "laurent.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace posbraid {

inline Laurent2 inner_product_def(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw precondition_error("strand mismatch");
    const int n = a.strands();
    const int w = static_cast<int>(a.length() + b.length());
    const Laurent2 p = homfly_positive_closure(concat(a, reverse_word(b)));
    return coeff_of_v(minus_z_power(n - 1) * p, w + n - 1);
}

/// <T_alpha, T_beta> by recursion on l(beta), peeling its smallest right descent.
inline Laurent2 inner_product_simple(const Permutation& alpha, const Permutation& beta) {
    if (alpha.size() != beta.size()) throw precondition_error("strand mismatch");
    if (beta.is_identity()) return Laurent2::constant(alpha.is_identity() ? 1 : 0);

    int i = 1;
    while (!right_descent(beta, i)) ++i;
    const Permutation kappa = beta.times_generator(i);
    const Permutation alpha_i = alpha.times_generator(i);
    if (!right_descent(alpha, i)) {
        // T_alpha s_i is simple
        return inner_product_simple(alpha_i, kappa);
    }
    // T_alpha = T_{alpha s_i} s_i, so T_alpha T_beta* contains s_i^2
    return Laurent2::monomial(1, 0, 1) * inner_product_simple(alpha, kappa) + inner_product_simple(alpha_i, kappa);
}

/// Pairings of all simple braids of S_n, permutations in lexicographic order.
struct GramMatrix {
    int n = 1;
    std::vector<Permutation> permutations;
    std::vector<Laurent2> entries;  ///< row-major

    std::size_t dimension() const { return permutations.size(); }

    const Laurent2& at(std::size_t row, std::size_t col) const { return entries[row * dimension() + col]; }

    bool is_identity() const {
        const auto d = dimension();
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                if (at(r, c) != Laurent2::constant(r == c ? 1 : 0)) return false;
            }
        }
        return true;
    }
};

/// Entries are computed from the definition; rows are spread over `threads`
/// workers, each with its own evaluator cache.
inline GramMatrix gram_matrix(int n, unsigned threads = std::thread::hardware_concurrency()) {
    if (n < 1) throw precondition_error("gram_matrix: n must be at least 1");
    GramMatrix g;
    g.n = n;
    g.permutations = all_permutations(n);
    const auto d = g.permutations.size();
    g.entries.assign(d * d, Laurent2{});

    std::vector<BraidWord> words;
    words.reserve(d);
    for (const auto& p : g.permutations) words.push_back(reduced_word(p));

    std::atomic<std::size_t> next_row{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        try {
            for (std::size_t r = next_row++; r < d; r = next_row++) {
                for (std::size_t c = 0; c < d; ++c) g.entries[r * d + c] = inner_product_def(words[r], words[c]);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next_row = d;
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(d)));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return g;
}

} // namespace posbraid
