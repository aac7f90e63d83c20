#pragma once

/**
 * @file braid.hpp
 * @brief Positive braid words and their permutations.
 *
 * Conventions used throughout the library:
 *  - generators are 1-based: letter i is sigma_i, 1 <= i <= n-1;
 *  - a Permutation maps the start position of a strand to its end position;
 *  - words compose left to right, so perm(u v) is perm(u) followed by
 *    perm(v), and appending letter i is right multiplication by s_i.
 *
 * A simple braid is identified with its permutation; reduced_word() picks one
 * representative word for it.
 */

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace posbraid {

class BraidWord {
public:
    BraidWord() = default;

    explicit BraidWord(int strands, std::vector<int> letters = {})
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1) throw precondition_error("BraidWord: strand count must be at least 1");
        for (int g : letters_) {
            if (g < 1 || g > strands_ - 1) {
                throw precondition_error("BraidWord: generator " + std::to_string(g) +
                                         " out of range for " + std::to_string(strands_) + " strands");
            }
        }
    }

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    /// Exponent sum; equal to the length for positive words.
    int writhe() const { return static_cast<int>(letters_.size()); }
    int operator[](std::size_t k) const { return letters_[k]; }

    auto operator<=>(const BraidWord&) const = default;

private:
    int strands_ = 1;
    std::vector<int> letters_;
};

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw precondition_error("concat: strand mismatch");
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

inline BraidWord append_letter(const BraidWord& w, int g) {
    std::vector<int> letters = w.letters();
    letters.push_back(g);
    return BraidWord(w.strands(), std::move(letters));
}

/// Same letters, more strands; the added strands close up to split circles.
inline BraidWord with_strands(const BraidWord& w, int strands) {
    if (strands < w.strands()) throw precondition_error("with_strands: cannot shrink a word");
    return BraidWord(strands, w.letters());
}

inline BraidWord subword(const BraidWord& w, std::size_t first, std::size_t count) {
    auto begin = w.letters().begin() + static_cast<std::ptrdiff_t>(first);
    return BraidWord(w.strands(), std::vector<int>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

inline BraidWord reverse_word(const BraidWord& w) {
    std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
    return BraidWord(w.strands(), std::move(letters));
}

/// Rotate left by k letters: cyclic_shift([1,2,2], 1) == [2,2,1].
inline BraidWord cyclic_shift(const BraidWord& w, long long k) {
    if (w.empty()) return w;
    const auto len = static_cast<long long>(w.length());
    const auto r = ((k % len) + len) % len;
    std::vector<int> letters = w.letters();
    std::rotate(letters.begin(), letters.begin() + r, letters.end());
    return BraidWord(w.strands(), std::move(letters));
}

/// Sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1).
inline BraidWord half_twist_word(int n) {
    if (n < 1) throw precondition_error("half_twist_word: n must be at least 1");
    std::vector<int> letters;
    for (int top = 1; top <= n - 1; ++top) {
        for (int g = top; g >= 1; --g) letters.push_back(g);
    }
    return BraidWord(n, std::move(letters));
}

class Permutation {
public:
    Permutation() : images_{1} {}

    static Permutation identity(int n) {
        if (n < 1) throw precondition_error("Permutation: size must be at least 1");
        Permutation p;
        p.images_.resize(static_cast<std::size_t>(n));
        std::iota(p.images_.begin(), p.images_.end(), 1);
        return p;
    }

    /// One-line notation: images[p-1] is the image of p.
    static Permutation from_images(std::vector<int> images) {
        const auto n = images.size();
        if (n == 0) throw precondition_error("Permutation: empty image list");
        std::vector<bool> seen(n + 1, false);
        for (int x : images) {
            if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)]) {
                throw precondition_error("Permutation: images are not a bijection of 1..n");
            }
            seen[static_cast<std::size_t>(x)] = true;
        }
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    /// The adjacent transposition s_i in S_n.
    static Permutation generator(int n, int i) { return identity(n).times_generator(i); }

    int size() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }
    int operator()(int p) const { return images_[static_cast<std::size_t>(p - 1)]; }

    bool is_identity() const {
        for (std::size_t k = 0; k < images_.size(); ++k) {
            if (images_[k] != static_cast<int>(k) + 1) return false;
        }
        return true;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.assign(images_.size(), 0);
        for (std::size_t k = 0; k < images_.size(); ++k) {
            r.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
        }
        return r;
    }

    /// This permutation followed by `next`.
    Permutation then(const Permutation& next) const {
        if (next.size() != size()) throw precondition_error("Permutation::then: size mismatch");
        Permutation r = *this;
        for (auto& x : r.images_) x = next(x);
        return r;
    }

    /// Right multiplication by s_i (append letter i): swap the values i and i+1.
    Permutation times_generator(int i) const {
        check_generator(i);
        Permutation r = *this;
        for (auto& x : r.images_) {
            if (x == i) {
                x = i + 1;
            } else if (x == i + 1) {
                x = i;
            }
        }
        return r;
    }

    /// Inversion count.
    int length() const {
        int inv = 0;
        for (std::size_t a = 0; a < images_.size(); ++a) {
            for (std::size_t b = a + 1; b < images_.size(); ++b) {
                if (images_[a] > images_[b]) ++inv;
            }
        }
        return inv;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    void check_generator(int i) const {
        if (i < 1 || i > size() - 1) {
            throw precondition_error("Permutation: generator " + std::to_string(i) + " out of range");
        }
    }

    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int x : p.images()) {
            h ^= static_cast<std::size_t>(x);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

inline Permutation perm_of_word(const BraidWord& w) {
    Permutation a = Permutation::identity(w.strands());
    for (int g : w.letters()) a = a.times_generator(g);
    return a;
}

inline int coxeter_length(const Permutation& a) { return a.length(); }

/// l(a s_i) < l(a): the strands ending at positions i and i+1 have already crossed.
inline bool right_descent(const Permutation& a, int i) {
    if (i < 1 || i > a.size() - 1) {
        throw precondition_error("right_descent: generator " + std::to_string(i) + " out of range");
    }
    int from_i = 0;
    int from_next = 0;
    for (int p = 1; p <= a.size(); ++p) {
        if (a(p) == i) from_i = p;
        if (a(p) == i + 1) from_next = p;
    }
    return from_i > from_next;
}

inline bool is_simple_word(const BraidWord& w) {
    return static_cast<int>(w.length()) == coxeter_length(perm_of_word(w));
}

/// Deterministic reduced word: repeatedly strip the smallest right descent,
/// which becomes the last remaining letter.
inline BraidWord reduced_word(const Permutation& a) {
    std::vector<int> reversed;
    Permutation cur = a;
    while (!cur.is_identity()) {
        int i = 1;
        while (!right_descent(cur, i)) ++i;
        reversed.push_back(i);
        cur = cur.times_generator(i);
    }
    return BraidWord(a.size(), std::vector<int>(reversed.rbegin(), reversed.rend()));
}

/// omega -> omega (x) 1: the permutation of S_{n+1} fixing n+1.
inline Permutation embed(const Permutation& a) {
    std::vector<int> images = a.images();
    images.push_back(a.size() + 1);
    return Permutation::from_images(std::move(images));
}

/// Inverse of embed(); requires a to fix its last point.
inline Permutation restrict_last(const Permutation& a) {
    if (a.size() < 2 || a(a.size()) != a.size()) {
        throw precondition_error("restrict_last: permutation does not fix its last strand");
    }
    std::vector<int> images = a.images();
    images.pop_back();
    return Permutation::from_images(std::move(images));
}

struct Destabilization {
    Permutation reduced;  ///< alpha' in S_{n-1}
    int k = 0;            ///< a = alpha' s_{n-1} s_{n-2} ... s_k
    BraidWord tail;       ///< sigma_{n-2} ... sigma_k in B_{n-1}
};

/// Split a (not fixing n) as alpha' s_{n-1} ... s_k. The closure of T_a equals
/// the closure of reduced_word(alpha') . tail on n-1 strands.
inline Destabilization destabilize_simple(const Permutation& a) {
    const int n = a.size();
    if (a(n) == n) throw precondition_error("destabilize_simple: permutation fixes last strand");

    // The strand starting at n is the one that travels down to position k.
    const int k = a(n);
    Permutation rest = a;
    for (int g = k; g <= n - 1; ++g) rest = rest.times_generator(g);

    Destabilization d{restrict_last(rest), k, BraidWord(n - 1)};
    std::vector<int> tail;
    for (int g = n - 2; g >= k; --g) tail.push_back(g);
    d.tail = BraidWord(n - 1, std::move(tail));

    // a = alpha' s_{n-1} ... s_k must be length-additive
    Permutation check = embed(d.reduced);
    for (int g = n - 1; g >= k; --g) check = check.times_generator(g);
    if (check != a || a.length() != d.reduced.length() + (n - k)) {
        throw std::logic_error("destabilize_simple: reconstruction failed");
    }
    return d;
}

/// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// Positive braid relations --------------------------------------------------

enum class RelationKind {
    Commute,  ///< s_i s_j -> s_j s_i, |i-j| >= 2
    Braid,    ///< s_i s_j s_i -> s_j s_i s_j, |i-j| = 1
};

struct RelationMove {
    std::size_t position = 0;
    RelationKind kind = RelationKind::Commute;

    bool operator==(const RelationMove&) const = default;
};

inline bool is_applicable(const BraidWord& w, const RelationMove& m) {
    const auto& x = w.letters();
    const auto p = m.position;
    if (m.kind == RelationKind::Commute) {
        return p + 1 < x.size() && std::abs(x[p] - x[p + 1]) >= 2;
    }
    return p + 2 < x.size() && x[p] == x[p + 2] && std::abs(x[p] - x[p + 1]) == 1;
}

inline std::vector<RelationMove> applicable_moves(const BraidWord& w) {
    std::vector<RelationMove> out;
    for (std::size_t p = 0; p < w.length(); ++p) {
        for (auto kind : {RelationKind::Commute, RelationKind::Braid}) {
            RelationMove m{p, kind};
            if (is_applicable(w, m)) out.push_back(m);
        }
    }
    return out;
}

inline BraidWord apply_move(const BraidWord& w, const RelationMove& m) {
    if (!is_applicable(w, m)) {
        throw precondition_error("apply_move: relation does not apply at position " +
                                 std::to_string(m.position));
    }
    std::vector<int> x = w.letters();
    const auto p = m.position;
    if (m.kind == RelationKind::Commute) {
        std::swap(x[p], x[p + 1]);
    } else {
        const int a = x[p];
        const int b = x[p + 1];
        x[p] = b;
        x[p + 1] = a;
        x[p + 2] = b;
    }
    return BraidWord(w.strands(), std::move(x));
}

// Text form -----------------------------------------------------------------

/// Compact digits when every letter is <= 9, otherwise space separated.
inline std::string to_text(const BraidWord& w) {
    const bool compact = std::all_of(w.letters().begin(), w.letters().end(), [](int g) { return g <= 9; });
    std::string out;
    for (std::size_t k = 0; k < w.length(); ++k) {
        if (!compact && k) out += ' ';
        out += std::to_string(w[k]);
    }
    // A lone multi-digit letter would read back as a compact word.
    if (!compact && w.length() == 1) out += ' ';
    return out;
}

/// Parse `32322323` or `3 2 3 2 2 3 2 3`. The strand count is max letter + 1
/// unless `strands` asks for more; asking for fewer is a parse error.
inline BraidWord parse_word(std::string_view text, std::optional<int> strands = std::nullopt) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    std::vector<int> letters;
    const bool spaced = std::any_of(text.begin(), text.end(), is_space);

    if (spaced) {
        std::size_t k = 0;
        while (k < text.size()) {
            while (k < text.size() && is_space(text[k])) ++k;
            std::size_t end = k;
            while (end < text.size() && !is_space(text[end])) ++end;
            if (end == k) break;
            const std::string token(text.substr(k, end - k));
            const bool digits = std::all_of(token.begin(), token.end(),
                                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
            if (!digits || token.size() > 9 || std::stoi(token) < 1) {
                throw parse_error("invalid generator token '" + token + "'");
            }
            letters.push_back(std::stoi(token));
            k = end;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw parse_error("invalid generator token '" + std::string(1, c) + "'");
            letters.push_back(c - '0');
        }
    }

    const int inferred = letters.empty() ? 1 : *std::max_element(letters.begin(), letters.end()) + 1;
    int n = inferred;
    if (strands) {
        if (*strands < inferred) {
            throw parse_error("strand count " + std::to_string(*strands) + " is smaller than the " +
                              std::to_string(inferred) + " strands the word needs");
        }
        n = *strands;
    }
    return BraidWord(n, std::move(letters));
}

} // namespace posbraid
