#pragma once

/**
 * @file resolve.hpp
 * @brief Simple resolution trees and the simple-braid (Hecke) decomposition.
 *
 * A non-simple positive word is resolved at a square P s_i s_i Q with the
 * quadratic relation s_i^2 = vz s_i + v^2: the left child is P Q (edge label
 * v^2) and the right child is P s_i Q (edge label vz). Leaves are simple
 * words. Collecting the leaves by permutation gives the coordinates of the
 * word in the simple-braid basis, with coefficients in N[v, z].
 */

#include "braid.hpp"
#include "laurent.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace posbraid {

struct SquareSplit {
    BraidWord prefix;     ///< P, a reduced word
    int generator = 0;    ///< i
    BraidWord suffix;     ///< Q, the unread tail of the input
    std::size_t scanned;  ///< letters of the input before the second s_i; P s_i is a reduced word for them
};

/// First-descent split: scan left to right tracking the prefix permutation a;
/// the first letter j with a right descent at j exposes the square.
inline std::optional<SquareSplit> find_square_split(const BraidWord& w) {
    Permutation a = Permutation::identity(w.strands());
    for (std::size_t k = 0; k < w.length(); ++k) {
        const int j = w[k];
        if (right_descent(a, j)) {
            return SquareSplit{reduced_word(a.times_generator(j)), j,
                               subword(w, k + 1, w.length() - k - 1), k};
        }
        a = a.times_generator(j);
    }
    return std::nullopt;
}

class ResolutionTree {
public:
    struct Branch;

    explicit ResolutionTree(BraidWord word) : word_(std::move(word)) {}
    ResolutionTree(BraidWord word, std::unique_ptr<Branch> split)
        : word_(std::move(word)), split_(std::move(split)) {}

    const BraidWord& word() const { return word_; }
    bool is_leaf() const { return split_ == nullptr; }
    const Branch& branch() const { return *split_; }

private:
    BraidWord word_;
    std::unique_ptr<Branch> split_;
};

struct ResolutionTree::Branch {
    int generator;
    BraidWord prefix;
    BraidWord suffix;
    ResolutionTree left;   ///< prefix . suffix, edge v^2
    ResolutionTree right;  ///< prefix . s_i . suffix, edge vz
};

inline BraidWord left_child_word(const SquareSplit& s) { return concat(s.prefix, s.suffix); }

inline BraidWord right_child_word(const SquareSplit& s) {
    return concat(append_letter(s.prefix, s.generator), s.suffix);
}

inline ResolutionTree build_tree(const BraidWord& w) {
    auto split = find_square_split(w);
    if (!split) return ResolutionTree(w);
    auto branch = std::make_unique<ResolutionTree::Branch>(ResolutionTree::Branch{
        split->generator, split->prefix, split->suffix,
        build_tree(left_child_word(*split)), build_tree(right_child_word(*split))});
    return ResolutionTree(w, std::move(branch));
}

inline std::size_t leaf_count(const ResolutionTree& t) {
    if (t.is_leaf()) return 1;
    return leaf_count(t.branch().left) + leaf_count(t.branch().right);
}

/// Coordinates of a positive word in the simple-braid basis.
class HeckeDecomposition {
public:
    using Map = std::map<Permutation, Laurent2>;

    explicit HeckeDecomposition(int strands) : strands_(strands) {}

    int strands() const { return strands_; }
    const Map& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    auto begin() const { return coeffs_.begin(); }
    auto end() const { return coeffs_.end(); }

    Laurent2 at(const Permutation& a) const {
        auto it = coeffs_.find(a);
        return it == coeffs_.end() ? Laurent2{} : it->second;
    }

    bool contains(const Permutation& a) const { return coeffs_.count(a) != 0; }

    void add(const Permutation& a, const Laurent2& c) {
        if (a.size() != strands_) throw precondition_error("HeckeDecomposition: permutation size mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    bool operator==(const HeckeDecomposition&) const = default;

private:
    int strands_;
    Map coeffs_;
};

/// Visit every leaf with its right-edge and left-edge counts along the root path.
inline void for_each_leaf(const ResolutionTree& t,
                          const std::function<void(const BraidWord&, int rights, int lefts)>& visit,
                          int rights = 0, int lefts = 0) {
    if (t.is_leaf()) {
        visit(t.word(), rights, lefts);
        return;
    }
    for_each_leaf(t.branch().left, visit, rights, lefts + 1);
    for_each_leaf(t.branch().right, visit, rights + 1, lefts);
}

/// Each leaf contributes z^{a} v^{a + 2L} at its permutation, a right edges and L left edges.
inline HeckeDecomposition collect_decomposition(const ResolutionTree& t) {
    HeckeDecomposition d(t.word().strands());
    for_each_leaf(t, [&](const BraidWord& leaf, int rights, int lefts) {
        d.add(perm_of_word(leaf), Laurent2::monomial(1, rights + 2 * lefts, rights));
    });
    return d;
}

/// Same result as collect_decomposition(build_tree(w)) without keeping the tree.
inline HeckeDecomposition resolve_decomposition(const BraidWord& w) {
    HeckeDecomposition d(w.strands());
    std::function<void(const BraidWord&, int, int)> walk = [&](const BraidWord& u, int rights, int lefts) {
        auto split = find_square_split(u);
        if (!split) {
            d.add(perm_of_word(u), Laurent2::monomial(1, rights + 2 * lefts, rights));
            return;
        }
        walk(left_child_word(*split), rights, lefts + 1);
        walk(right_child_word(*split), rights + 1, lefts);
    };
    walk(w, 0, 0);
    return d;
}

/// Multiply letters in one at a time: T_a s_i is T_{a s_i} when that is longer,
/// otherwise vz T_a + v^2 T_{a s_i}. State is bounded by n! entries.
inline HeckeDecomposition hecke_decompose_iterative(const BraidWord& w) {
    const Laurent2 vz = Laurent2::monomial(1, 1, 1);
    const Laurent2 v2 = Laurent2::monomial(1, 2, 0);

    HeckeDecomposition d(w.strands());
    d.add(Permutation::identity(w.strands()), Laurent2::constant(1));
    for (int g : w.letters()) {
        HeckeDecomposition next(w.strands());
        for (const auto& [a, c] : d) {
            const Permutation as = a.times_generator(g);
            if (!right_descent(a, g)) {
                next.add(as, c);
            } else {
                next.add(a, c * vz);
                next.add(as, c * v2);
            }
        }
        d = std::move(next);
    }
    return d;
}

} // namespace posbraid
