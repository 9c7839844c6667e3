#include <gtest/gtest.h>

#include <random>

#include "apcoprime/crt.hpp"
#include "apcoprime/errors.hpp"
#include "oracles.hpp"
#include "ring_fixtures.hpp"

using namespace apcoprime;
using testing_support::all_rings;
using testing_support::random_element;
using testing_support::random_nonzero;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();
const RingDescriptor kGauss = RingDescriptor::quadratic(-1);

Congruence zc(long u, long v) { return {embed_int(u, kZ), embed_int(v, kZ)}; }

}  // namespace

TEST(CheckCompatible, Examples) {
    EXPECT_FALSE(check_compatible({zc(3, 7)}).has_value());
    const auto w = check_compatible({zc(0, 4), zc(1, 6)});
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, (IncompatiblePair{1, 2}));
    EXPECT_FALSE(check_compatible({zc(1, 4), zc(3, 6)}).has_value());
    const auto w3 = check_compatible({zc(1, 4), zc(3, 6), zc(1, 3)});
    ASSERT_TRUE(w3.has_value());
    EXPECT_EQ(*w3, (IncompatiblePair{2, 3}));
}

TEST(Solve, Examples) {
    auto r = solve({zc(3, 1)});
    ASSERT_TRUE(r.solved());
    EXPECT_EQ(r.solution->value, embed_int(0, kZ));
    r = solve({zc(1, 4), zc(3, 6)});
    ASSERT_TRUE(r.solved());
    EXPECT_EQ(r.solution->value, embed_int(9, kZ));
    EXPECT_EQ(r.solution->modulus, embed_int(12, kZ));
    r = solve({zc(0, 4), zc(1, 6)});
    EXPECT_FALSE(r.solved());
    EXPECT_EQ(r.witness, (IncompatiblePair{1, 2}));
    r = solve({zc(5, -7)});
    ASSERT_TRUE(r.solved());
    EXPECT_EQ(r.solution->value, embed_int(5, kZ));
}

TEST(Solve, GaussianExample) {
    const RingElement p(kGauss, 2, 1), q(kGauss, 2, -1);
    const CongruenceSystem sys{{zero(kGauss), p}, {-one(kGauss), q}};
    const auto r = solve(sys);
    ASSERT_TRUE(r.solved());
    const auto z = r.solution->value;
    EXPECT_TRUE(divides(p, z));
    EXPECT_TRUE(divides(q, z + one(kGauss)));
    EXPECT_TRUE(satisfies(sys, z));
    EXPECT_TRUE(are_associates(r.solution->modulus, embed_int(5, kGauss)));
}

TEST(Solve, Preconditions) {
    EXPECT_THROW(solve({}), PreconditionError);
    EXPECT_THROW(solve({zc(1, 0)}), PreconditionError);
    EXPECT_THROW(solve({zc(1, 3), {one(kGauss), embed_int(5, kGauss)}}), PreconditionError);
}

TEST(Solve, MatchesResidueScanForPairs) {
    for (long v1 = 1; v1 <= 12; ++v1)
        for (long v2 = 1; v2 <= 12; ++v2)
            for (long u1 = 0; u1 < v1; ++u1)
                for (long u2 = 0; u2 < v2; ++u2) {
                    const auto expected = oracle::scan_crt({{u1, v1}, {u2, v2}});
                    const CongruenceSystem sys{zc(u1, v1), zc(u2, v2)};
                    const auto r = solve(sys);
                    ASSERT_EQ(r.solved(), expected.has_value());
                    if (expected) {
                        ASSERT_EQ(r.solution->value, embed_int(*expected, kZ));
                        ASSERT_EQ(r.solution->modulus, embed_int(std::lcm(v1, v2), kZ));
                    } else {
                        ASSERT_EQ(r.witness, (IncompatiblePair{1, 2}));
                    }
                }
}

TEST(MergeCongruences, PreservesSolutionSetInEveryRing) {
    // Solutions of the merged congruence are exactly the common solutions.
    std::mt19937_64 rng(17);
    for (const auto& ring : all_rings()) {
        for (int k = 0; k < 200; ++k) {
            const Congruence a{random_element(rng, ring, 20), random_nonzero(rng, ring, 6)};
            const Congruence b{random_element(rng, ring, 20), random_nonzero(rng, ring, 6)};
            const auto merged = merge_congruences(a, b);
            const bool compatible = divides(gcd_ring(a.modulus, b.modulus), a.residue - b.residue);
            ASSERT_EQ(merged.has_value(), compatible) << ring.tag();
            for (int t = 0; t < 20; ++t) {
                const auto z = random_element(rng, ring, 40);
                const bool in_both = satisfies({a, b}, z);
                const bool in_merged = merged && satisfies({*merged}, z);
                ASSERT_EQ(in_both, in_merged);
            }
            if (merged) {
                ASSERT_TRUE(satisfies({a, b}, merged->residue));
                ASSERT_TRUE(satisfies({a, b}, merged->residue + merged->modulus));
            }
        }
    }
}

TEST(Solve, RandomQuadraticSystemsSubstitute) {
    std::mt19937_64 rng(23);
    for (const auto& ring : all_rings()) {
        for (int k = 0; k < 50; ++k) {
            // Build a solvable system from a hidden solution.
            const auto z0 = random_element(rng, ring, 200);
            CongruenceSystem sys;
            for (int i = 0; i < 3; ++i) {
                const auto v = random_nonzero(rng, ring, 9);
                sys.push_back({z0 + v * random_element(rng, ring, 5), v});
            }
            const auto r = solve(sys);
            ASSERT_TRUE(r.solved()) << ring.tag();
            ASSERT_TRUE(satisfies(sys, r.solution->value));
            ASSERT_TRUE(divides(r.solution->modulus, r.solution->value - z0));
        }
    }
}
