#include <gtest/gtest.h>

#include <random>

#include "apcoprime/errors.hpp"
#include "apcoprime/integer.hpp"
#include "apcoprime/ring.hpp"
#include "ring_fixtures.hpp"

using namespace apcoprime;
using testing_support::all_rings;
using testing_support::random_element;
using testing_support::random_nonzero;
using testing_support::reference_norm;

namespace {

const RingDescriptor kZ = RingDescriptor::integers();
const RingDescriptor kGauss = RingDescriptor::quadratic(-1);
const RingDescriptor kSqrt17 = RingDescriptor::quadratic(17);

RingElement g(long x, long y) { return {kGauss, x, y}; }

}  // namespace

TEST(RingDescriptor, Validation) {
    EXPECT_THROW(RingDescriptor::quadratic(4), UnsupportedRingError);
    EXPECT_THROW(RingDescriptor::quadratic(1), UnsupportedRingError);
    EXPECT_THROW(RingDescriptor::quadratic(0), UnsupportedRingError);
    EXPECT_THROW(RingDescriptor::quadratic(-5), UnsupportedRingError);
    EXPECT_THROW(RingDescriptor::quadratic(23), UnsupportedRingError);
    RingAllowlist custom;
    custom.real.push_back(23);
    EXPECT_NO_THROW(RingDescriptor::quadratic(23, custom));
    EXPECT_EQ(kSqrt17.basis(), BasisConvention::OmegaHalf);
    EXPECT_EQ(kGauss.basis(), BasisConvention::OmegaSqrt);
    EXPECT_EQ(kSqrt17.omega_square_constant(), 4);
}

TEST(RingDescriptor, Parsing) {
    EXPECT_EQ(parse_ring("Z"), kZ);
    EXPECT_EQ(parse_ring("gauss"), kGauss);
    EXPECT_EQ(parse_ring("eisenstein"), RingDescriptor::quadratic(-3));
    EXPECT_EQ(parse_ring("Q(sqrt 17)"), kSqrt17);
    EXPECT_EQ(parse_ring("Q( sqrt -2 )"), RingDescriptor::quadratic(-2));
    EXPECT_EQ(kSqrt17.tag(), "Q(sqrt 17)");
    EXPECT_THROW(parse_ring("Q(sqrt 10)"), UnsupportedRingError);
    EXPECT_THROW(parse_ring("banana"), PreconditionError);
}

TEST(RingDescriptor, FundamentalUnits) {
    for (long m : RingAllowlist::standard().real) {
        const auto ring = RingDescriptor::quadratic(m);
        const auto [x, y] = ring.fundamental_unit();
        const RingElement eps(ring, x, y);
        EXPECT_TRUE(is_unit(eps)) << m;
        EXPECT_GT(y, 0) << m;
    }
    const auto [x2, y2] = RingDescriptor::quadratic(2).fundamental_unit();
    EXPECT_EQ(x2, 1);
    EXPECT_EQ(y2, 1);
}

TEST(RingElement, RejectsIrrationalPartInZ) {
    EXPECT_THROW(RingElement(kZ, 1, 1), PreconditionError);
}

TEST(Arithmetic, Examples) {
    EXPECT_EQ(embed_int(5, kGauss), g(5, 0));
    EXPECT_EQ(g(3, 4) + zero(kGauss), g(3, 4));
    EXPECT_EQ(g(1, 1) * g(1, -1), embed_int(2, kGauss));
    EXPECT_EQ(embed_int(2, kSqrt17) * embed_int(3, kSqrt17), embed_int(6, kSqrt17));
    EXPECT_THROW(add(g(1, 0), embed_int(1, kSqrt17)), RingMismatchError);
}

TEST(Norm, Examples) {
    EXPECT_EQ(norm(one(kGauss)), 1);
    EXPECT_EQ(norm(RingElement(kSqrt17, 1, 1)), -2);
    EXPECT_EQ(norm(g(2, 1)), 5);
    EXPECT_TRUE(is_unit(one(kSqrt17)));
    EXPECT_FALSE(is_unit(zero(kGauss)));
    EXPECT_TRUE(is_unit(g(0, 1)));
}

TEST(Arithmetic, RingAxiomsAndNormInEveryRing) {
    std::mt19937_64 rng(7);
    for (const auto& ring : all_rings()) {
        for (int k = 0; k < 300; ++k) {
            const auto a = random_element(rng, ring, 50);
            const auto b = random_element(rng, ring, 50);
            const auto c = random_element(rng, ring, 50);
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ(a * one(ring), a);
            ASSERT_EQ(a - a, zero(ring));
            ASSERT_EQ(norm(a), reference_norm(a));
            ASSERT_EQ(norm(a * b), norm(a) * norm(b));
            ASSERT_EQ(a * conjugate(a), embed_int(norm(a), ring));
            ASSERT_EQ(conjugate(conjugate(a)), a);
            ASSERT_EQ(power(a, 3), a * a * a);
            ASSERT_EQ(scale(a, 7), embed_int(7, ring) * a);
        }
    }
}

TEST(DivMod, Examples) {
    const auto a = g(13, -7);
    auto r = divmod(a, one(kGauss));
    EXPECT_EQ(r.quotient, a);
    EXPECT_EQ(r.remainder, zero(kGauss));
    r = divmod(zero(kGauss), g(2, 1));
    EXPECT_EQ(r.quotient, zero(kGauss));
    EXPECT_EQ(r.remainder, zero(kGauss));
    EXPECT_THROW(divmod(a, zero(kGauss)), DivisionByZeroError);
}

TEST(DivMod, EuclideanPropertyEveryRing) {
    std::mt19937_64 rng(99);
    for (const auto& ring : all_rings()) {
        for (int k = 0; k < 10000; ++k) {
            const auto a = random_element(rng, ring, 1000);
            const auto b = random_nonzero(rng, ring, 60);
            const auto [q, r] = divmod(a, b);
            ASSERT_EQ(q * b + r, a) << ring.tag();
            ASSERT_LT(abs(norm(r)), abs(norm(b))) << ring.tag() << " " << format_element(a) << " / "
                                                 << format_element(b);
        }
    }
}

TEST(DivMod, HardRealFields) {
    // Fields where rounding the quotient coordinates is not always enough.
    for (long m : {57L, 73L, 41L, 37L}) {
        const auto ring = RingDescriptor::quadratic(m);
        for (long x = -20; x <= 20; ++x)
            for (long y = -20; y <= 20; ++y)
                for (long bx = -3; bx <= 3; ++bx)
                    for (long by = -3; by <= 3; ++by) {
                        const RingElement a(ring, x, y), b(ring, bx, by);
                        if (b.is_zero()) continue;
                        const auto [q, r] = divmod(a, b);
                        ASSERT_EQ(q * b + r, a);
                        ASSERT_LT(abs(norm(r)), abs(norm(b))) << m;
                    }
    }
}

TEST(Divisibility, ExactQuotient) {
    const auto a = g(2, 1) * g(3, -2);
    EXPECT_EQ(exact_quotient(a, g(2, 1)), g(3, -2));
    EXPECT_FALSE(exact_quotient(g(1, 0), g(2, 1)).has_value());
    EXPECT_TRUE(divides(zero(kGauss), zero(kGauss)));
    EXPECT_FALSE(divides(zero(kGauss), one(kGauss)));
    EXPECT_TRUE(divides(one(kGauss), g(7, 3)));
}

TEST(Associates, CanonicalForms) {
    EXPECT_EQ(canonical_associate(zero(kGauss)), zero(kGauss));
    EXPECT_EQ(canonical_associate(g(0, 1)), one(kGauss));
    EXPECT_EQ(canonical_associate(embed_int(-3, kZ)), embed_int(3, kZ));
    std::mt19937_64 rng(5);
    for (const auto& ring : all_rings()) {
        const auto units = [&] {
            std::vector<RingElement> u{one(ring), -one(ring)};
            if (ring.is_real()) {
                const auto [x, y] = ring.fundamental_unit();
                const RingElement eps(ring, x, y);
                u.push_back(eps);
                u.push_back(eps * eps * eps);
                u.push_back(conjugate(eps));
            }
            if (ring.m() == -1) u.push_back({ring, 0, 1});
            if (ring.m() == -3) u.push_back({ring, 0, 1});
            return u;
        }();
        for (int k = 0; k < 200; ++k) {
            const auto a = random_nonzero(rng, ring, 40);
            const auto form = canonical_form(a);
            ASSERT_TRUE(is_unit(form.unit));
            ASSERT_EQ(form.value, form.unit * a);
            ASSERT_EQ(canonical_associate(form.value), form.value);
            for (const auto& u : units) {
                ASSERT_EQ(canonical_associate(u * a), form.value) << ring.tag() << " " << format_element(a);
                ASSERT_TRUE(are_associates(u * a, a));
            }
        }
        ASSERT_EQ(canonical_associate(one(ring)), one(ring)) << ring.tag();
    }
}

TEST(GcdRing, Examples) {
    EXPECT_EQ(gcd_ring(g(3, 4), zero(kGauss)), canonical_associate(g(3, 4)));
    EXPECT_EQ(gcd_ring(g(2, 1), g(2, -1)), one(kGauss));
    EXPECT_EQ(gcd_ring(embed_int(4, kGauss), embed_int(6, kGauss)), canonical_associate(embed_int(2, kGauss)));
    EXPECT_EQ(gcd_ring(zero(kGauss), zero(kGauss)), zero(kGauss));
    EXPECT_EQ(gcd_ring(embed_int(-4, kZ), embed_int(6, kZ)), embed_int(2, kZ));
}

TEST(GcdRing, DivisibilityAndBezoutEveryRing) {
    std::mt19937_64 rng(31);
    for (const auto& ring : all_rings()) {
        for (int k = 0; k < 400; ++k) {
            const auto c = random_nonzero(rng, ring, 8);
            const auto a = random_element(rng, ring, 30) * c;
            const auto b = random_element(rng, ring, 30) * c;
            const auto d = gcd_ring(a, b);
            ASSERT_TRUE(divides(d, a));
            ASSERT_TRUE(divides(d, b));
            if (!a.is_zero() || !b.is_zero()) ASSERT_TRUE(divides(c, d)) << ring.tag();
            ASSERT_EQ(d, canonical_associate(d));
            ASSERT_EQ(coprime(a, b), is_unit(d));
            const auto bz = extended_gcd_ring(a, b);
            ASSERT_EQ(bz.g, d);
            ASSERT_EQ(bz.s * a + bz.t * b, bz.g);
        }
    }
}

TEST(ExtendedGcdRing, Examples) {
    const auto a = g(0, 3);
    const auto r = extended_gcd_ring(a, zero(kGauss));
    EXPECT_EQ(r.g, embed_int(3, kGauss));
    EXPECT_EQ(r.t, zero(kGauss));
    EXPECT_TRUE(is_unit(r.s));
    const auto u = extended_gcd_ring(one(kGauss), g(5, 5));
    EXPECT_EQ(u.g, one(kGauss));
    EXPECT_EQ(u.s * one(kGauss) + u.t * g(5, 5), one(kGauss));
}

TEST(GcdRing, DifferenceDividesIndexGap) {
    // gcd(a + r d, a + s d) | (r - s) whenever gcd(a, d) is a unit.
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> idx(0, 30);
    for (const auto& ring : all_rings()) {
        int done = 0;
        while (done < 300) {
            const auto a = random_element(rng, ring, 60);
            const auto d = random_element(rng, ring, 60);
            if (!coprime(a, d)) continue;
            const long r = idx(rng), s = idx(rng);
            const auto t1 = a + scale(d, r), t2 = a + scale(d, s);
            ASSERT_TRUE(divides(gcd_ring(t1, t2), embed_int(r - s, ring))) << ring.tag();
            ++done;
        }
    }
}

namespace {

/// Roots of the minimal polynomial of w modulo p, by substitution.
int count_roots(const RingDescriptor& ring, long p) {
    int roots = 0;
    for (long r = 0; r < p; ++r) {
        long v = ring.basis() == BasisConvention::OmegaHalf ? r * r - r - (ring.m() - 1) / 4 : r * r - ring.m();
        if (((v % p) + p) % p == 0) ++roots;
    }
    return roots;
}

}  // namespace

TEST(PrimesAbove, MatchesRootCountAndFactorsP) {
    for (const auto& ring : all_rings()) {
        if (ring.is_integers()) continue;
        for (long p : primes_in_range(2, 60)) {
            const auto pa = primes_above(p, ring);
            const int roots = count_roots(ring, p);
            const Splitting expected =
                roots == 2 ? Splitting::Split : roots == 1 ? Splitting::Ramified : Splitting::Inert;
            ASSERT_EQ(pa.splitting, expected) << ring.tag() << " p=" << p;
            const auto pr = embed_int(p, ring);
            if (pa.splitting == Splitting::Split) {
                ASSERT_EQ(abs(norm(*pa.first)), p);
                ASSERT_EQ(abs(norm(*pa.second)), p);
                ASSERT_FALSE(are_associates(*pa.first, *pa.second));
                ASSERT_TRUE(are_associates(*pa.first * *pa.second, pr));
            } else if (pa.splitting == Splitting::Ramified) {
                ASSERT_EQ(abs(norm(*pa.first)), p);
                ASSERT_TRUE(are_associates(*pa.first * *pa.first, pr));
            } else {
                ASSERT_FALSE(pa.first.has_value());
            }
        }
    }
}

TEST(PrimesAbove, Examples) {
    const auto five = primes_above(5, kGauss);
    EXPECT_EQ(five.splitting, Splitting::Split);
    EXPECT_EQ(primes_above(2, kGauss).splitting, Splitting::Ramified);
    EXPECT_EQ(primes_above(3, kGauss).splitting, Splitting::Inert);
    EXPECT_EQ(primes_above(2, kSqrt17).splitting, Splitting::Split);
    EXPECT_EQ(primes_above(5, kZ).splitting, Splitting::Inert);
    EXPECT_THROW(primes_above(6, kGauss), PreconditionError);
}

TEST(TextForm, RoundTrip) {
    EXPECT_EQ(format_element(g(3, 0)), "3");
    EXPECT_EQ(format_element(g(3, 2)), "3+2*w");
    EXPECT_EQ(format_element(g(-3, -2)), "-3-2*w");
    EXPECT_EQ(parse_element(" 1 + 1 * w ", kSqrt17), RingElement(kSqrt17, 1, 1));
    EXPECT_EQ(parse_element("-4", kZ), embed_int(-4, kZ));
    EXPECT_THROW(parse_element("1+w", kZ), PreconditionError);
    EXPECT_THROW(parse_element("abc", kGauss), ParseError);
    std::mt19937_64 rng(3);
    for (const auto& ring : all_rings())
        for (int k = 0; k < 50; ++k) {
            const auto a = random_element(rng, ring, 1000);
            ASSERT_EQ(parse_element(format_element(a), ring), a);
        }
}
