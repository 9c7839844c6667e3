#include <gtest/gtest.h>

#include "apcoprime/decomposition.hpp"
#include "apcoprime/errors.hpp"
#include "oracles.hpp"

using namespace apcoprime;

TEST(DeltaQuadratic, Examples) {
    EXPECT_EQ(delta_quadratic(-1).prime, 5);
    EXPECT_EQ(delta_quadratic(73).prime, 2);
    EXPECT_EQ(delta_quadratic(17).prime, 2);
    EXPECT_EQ(delta_quadratic(2).prime, 7);
    EXPECT_EQ(delta_quadratic(-3).prime, 7);
    EXPECT_EQ(delta_quadratic(-1).method, DeltaMethod::ClosedFormQuadratic);
    EXPECT_THROW(delta_quadratic(10), UnsupportedRingError);
}

TEST(DeltaOracle, Examples) {
    EXPECT_FALSE(delta_oracle(RingDescriptor::integers(), 1000).is_finite());
    EXPECT_EQ(delta_oracle(RingDescriptor::integers(), 1000).bound, 1000);
    EXPECT_EQ(delta_oracle(RingDescriptor::quadratic(-1), 13).prime, 5);
    EXPECT_EQ(delta_oracle(RingDescriptor::quadratic(-3), 13).prime, 7);
    EXPECT_FALSE(delta_oracle(RingDescriptor::quadratic(-1), 4).is_finite());
}

TEST(DeltaQuadratic, AgreesWithOracleEverywhere) {
    const auto& allow = RingAllowlist::standard();
    std::vector<long> ms = allow.imaginary;
    ms.insert(ms.end(), allow.real.begin(), allow.real.end());
    for (long m : ms) {
        const auto closed = delta_quadratic(m);
        const auto searched = delta_oracle(RingDescriptor::quadratic(m), 100);
        ASSERT_TRUE(closed.is_finite());
        ASSERT_EQ(closed.prime, searched.prime) << m;
    }
}

TEST(DeltaQuadratic, MatchesLegendreScan) {
    // Independent route: least odd p with m a nonzero square mod p, or 2 when m = 1 mod 8.
    for (long m : RingAllowlist::standard().real) {
        long expected = 0;
        if (((m % 8) + 8) % 8 == 1) {
            expected = 2;
        } else {
            for (long p = 3; expected == 0; p += 2) {
                if (!oracle::trial_prime(p) || m % p == 0) continue;
                if (oracle::euler_criterion(m, p) == 1) expected = p;
            }
        }
        ASSERT_EQ(delta_quadratic(m).prime, expected) << m;
    }
}

TEST(DeltaCyclotomic, Examples) {
    EXPECT_FALSE(delta_cyclotomic(1).is_finite());
    EXPECT_EQ(delta_cyclotomic(5).prime, 11);
    EXPECT_EQ(delta_cyclotomic(4).prime, 5);
    EXPECT_EQ(delta_cyclotomic(4).prime, delta_quadratic(-1).prime);
    EXPECT_EQ(delta_cyclotomic(3).prime, 7);
    EXPECT_EQ(delta_cyclotomic(3).prime, delta_quadratic(-3).prime);
    EXPECT_EQ(delta_cyclotomic(5).method, DeltaMethod::ClosedFormCyclotomic);
}

TEST(DeltaCyclotomic, MatchesOrderEnumeration) {
    for (long m = 2; m <= 60; ++m) {
        long expected = 0;
        for (long p = 2; expected == 0 && p < 100000; ++p) {
            if (!oracle::trial_prime(p)) continue;
            long l = m;
            while (l % p == 0) l /= p;
            if (l <= 1) continue;
            // p qualifies unless its order mod l equals phi(l).
            if (oracle::enumerate_order(p, l) != oracle::count_phi(l)) expected = p;
        }
        // m = 2 gives Q itself: no prime qualifies.
        const auto got = delta_cyclotomic(m).prime;
        if (expected == 0)
            ASSERT_FALSE(got.has_value()) << m;
        else
            ASSERT_EQ(got, expected) << m;
    }
}

TEST(DeltaCapped, OnlySmallValuesMatter) {
    EXPECT_EQ(delta_capped(RingDescriptor::quadratic(-1)), 5);
    EXPECT_FALSE(delta_capped(RingDescriptor::integers()).has_value());
    for (long m : RingAllowlist::standard().real) {
        const auto c = delta_capped(RingDescriptor::quadratic(m));
        if (c) EXPECT_LE(*c, kDeltaRelevantBound);
        const auto full = delta_quadratic(m).prime;
        EXPECT_EQ(c.has_value(), *full <= kDeltaRelevantBound) << m;
    }
}

TEST(CyclotomicUfd, KnownConductors) {
    EXPECT_EQ(cyclotomic_ufd_conductors().size(), 30u);
    EXPECT_TRUE(cyclotomic_is_known_ufd(4));
    EXPECT_TRUE(cyclotomic_is_known_ufd(84));
    EXPECT_TRUE(cyclotomic_is_known_ufd(66));
    EXPECT_FALSE(cyclotomic_is_known_ufd(23));
    EXPECT_FALSE(cyclotomic_is_known_ufd(46));
}
