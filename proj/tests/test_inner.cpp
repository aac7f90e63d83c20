#include "oracles.hpp"
#include "posbraid/inner.hpp"

#include <gtest/gtest.h>

using namespace posbraid;
using posbraid::testing::perm;
using posbraid::testing::word;

namespace {

const Laurent2 one = Laurent2::constant(1);

} // namespace

TEST(InnerDef, Examples) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(inner_product_def(BraidWord(n), BraidWord(n)), one);
    EXPECT_TRUE(inner_product_def(word(3, {1}), word(3, {2})).is_zero());
    EXPECT_EQ(inner_product_def(word(3, {1}), word(3, {1})), one);
    EXPECT_THROW(inner_product_def(word(3, {1}), word(4, {1})), precondition_error);
}

TEST(InnerSimple, Examples) {
    const auto w0 = perm(3, {1, 2, 1});
    EXPECT_EQ(inner_product_simple(w0, w0), one);
    EXPECT_TRUE(inner_product_simple(Permutation::identity(3), Permutation::generator(3, 1)).is_zero());
    EXPECT_TRUE(inner_product_simple(perm(3, {1, 2}), perm(3, {2, 1})).is_zero());
    EXPECT_THROW(inner_product_simple(Permutation::identity(3), Permutation::identity(2)), precondition_error);
}

TEST(InnerSimple, KroneckerDeltaUpToFive) {
    for (int n = 1; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& a : perms) {
            for (const auto& b : perms) {
                EXPECT_EQ(inner_product_simple(a, b), Laurent2::constant(a == b ? 1 : 0));
            }
        }
    }
}

TEST(InnerCrossCheck, AllOfS3) {
    for (const auto& a : all_permutations(3)) {
        for (const auto& b : all_permutations(3)) {
            EXPECT_EQ(inner_product_def(reduced_word(a), reduced_word(b)), inner_product_simple(a, b));
        }
    }
}

TEST(InnerCrossCheck, RandomS4Pairs) {
    const auto perms = all_permutations(4);
    std::mt19937_64 rng(113);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = perms[pick(rng)];
        const auto& b = perms[pick(rng)];
        EXPECT_EQ(inner_product_def(reduced_word(a), reduced_word(b)), inner_product_simple(a, b));
    }
}

TEST(InnerProperty, Symmetric) {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 3;
        const auto a = posbraid::testing::random_word(rng, n, 0, 8);
        const auto b = posbraid::testing::random_word(rng, n, 0, 8);
        EXPECT_EQ(inner_product_def(a, b), inner_product_def(b, a)) << to_text(a) << " , " << to_text(b);
    }
}

TEST(InnerProperty, ReadsOffHeckeCoordinates) {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 60; ++trial) {
        const auto u = posbraid::testing::random_word(rng, 3, 0, 9);
        const auto d = hecke_decompose_iterative(u);
        for (const auto& b : all_permutations(3)) {
            EXPECT_EQ(inner_product_def(u, reduced_word(b)), d.at(b).at_v_one()) << to_text(u);
        }
    }
}

TEST(Gram, SmallCases) {
    const auto g1 = gram_matrix(1);
    EXPECT_EQ(g1.dimension(), 1u);
    EXPECT_EQ(g1.at(0, 0), one);

    const auto g3 = gram_matrix(3);
    EXPECT_EQ(g3.dimension(), 6u);
    EXPECT_TRUE(g3.is_identity());
    EXPECT_EQ(g3.permutations, all_permutations(3));

    EXPECT_THROW(gram_matrix(0), precondition_error);
}

TEST(Gram, ThreadCountDoesNotMatter) {
    const auto serial = gram_matrix(4, 1);
    const auto parallel = gram_matrix(4, 8);
    EXPECT_TRUE(serial.is_identity());
    EXPECT_EQ(serial.entries, parallel.entries);
}
