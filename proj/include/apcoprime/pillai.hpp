#pragma once

// Coprime terms in arithmetic progressions.
//
// Over Z every progression a, a+d, ..., a+(n-1)d with gcd(a, d) = 1 and
// n <= 16 has a term coprime to all the others; over a UFD R of
// characteristic zero the sharp length is min{16, 1 + delta_R}. This header
// provides the search, an exhaustive verifier for that bound, explicit
// constructions showing the bound cannot be raised, and a few corollaries.

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "apcoprime/crt.hpp"
#include "apcoprime/integer.hpp"
#include "apcoprime/ring.hpp"

namespace apcoprime {

inline constexpr long kPillaiBound = 16;

class ArithmeticProgression {
public:
    ArithmeticProgression(RingElement first, RingElement difference, long length);

    const RingElement& first() const { return first_; }
    const RingElement& difference() const { return difference_; }
    long length() const { return length_; }
    const RingDescriptor& ring() const { return first_.ring(); }

    /// a + (i-1)d for 1 <= i <= n.
    RingElement term(long i) const;
    std::vector<RingElement> terms() const;

private:
    RingElement first_;
    RingElement difference_;
    long length_;
};

struct CoprimeReport {
    std::optional<long> witness;     // smallest index coprime to all others
    std::map<long, long> offenders;  // i -> smallest j with gcd(term i, term j) a non-unit

    friend bool operator==(const CoprimeReport&, const CoprimeReport&) = default;
};

/// Elements of `items` divisible by r, order preserved. r must be nonzero.
std::vector<RingElement> multiples(const RingElement& r, const std::vector<RingElement>& items);

/// gcd(term index, term j) is a unit for all j != index (1-based).
bool coprime_to_all(long index, const ArithmeticProgression& ap);

/// Full pairwise scan. Requires gcd(a, d) to be a unit.
CoprimeReport find_coprime_term(const ArithmeticProgression& ap);

/// min{16, 1 + delta_R}; 16 when delta_R > 13.
long max_guaranteed_length(const RingDescriptor& ring);

struct SweepViolation {
    RingElement first;
    RingElement difference;
    long length = 0;
};

struct SweepReport {
    RingDescriptor ring;
    long coord_bound = 0;
    long n_max = 0;
    std::uint64_t pairs_checked = 0;         // coprime (a, d) pairs visited
    std::uint64_t progressions_checked = 0;  // (a, d, n) triples with 2 <= n <= n_max
    std::vector<SweepViolation> violations;  // empty, or the first violation found

    bool ok() const { return violations.empty(); }
};

/// Every coprime (a, d) with coordinates in [-coord_bound, coord_bound] and
/// every 2 <= n <= n_max. Over Z, (a, d) and (-a, -d) are visited once
/// (d > 0, or d = 0 and a = 1). Requires 1 <= n_max <= max_guaranteed_length.
/// Rows of the first coordinate of a are split across `jobs` threads.
SweepReport verify_bound_sweep(const RingDescriptor& ring, long coord_bound, long n_max,
                               unsigned jobs = 1);

struct RingCounterexample {
    ArithmeticProgression progression;
    long delta = 0;
    RingElement p_prime;   // P | delta, P | z
    RingElement q_prime;   // Q | delta, Q | z + 1
    RingElement modulus;   // (30030/delta) * P
};

/// The progression z, z+1, ..., z+(n-1) with z = 0 mod (30030/delta)*P and
/// z = -1 mod Q for the two primes P, Q above delta. Requires delta_R <= 13 and
/// 1 + delta < n < 17. The absence of a coprime term is checked before returning.
RingCounterexample construct_counterexample_ring(const RingDescriptor& ring, long n);

/// Smallest x in [1, scan_limit] such that x, ..., x+n-1 has no element
/// coprime to the rest. Requires n >= 17.
std::optional<Integer> search_counterexample_consecutive(long n, const Integer& scan_limit);

/// True iff start, ..., start+n-1 contains an element coprime to all others.
bool consecutive_block_has_coprime(const Integer& start, long n);

/// z with term(i) | z - i for every i; the progression must be over Z with gcd(a, d) = 1.
Integer transfer_ap_to_consecutive(const ArithmeticProgression& ap);

struct SquareTriple {
    Integer s1, s2, s3;
    friend bool operator==(const SquareTriple&, const SquareTriple&) = default;
    friend bool operator<(const SquareTriple& a, const SquareTriple& b) {
        return std::tie(a.s1, a.s2, a.s3) < std::tie(b.s1, b.s2, b.s3);
    }
};

/// Three-term progressions of coprime squares a^2 < b^2 < c^2 (a^2 + c^2 = 2b^2),
/// from rational points of x^2 + y^2 = 2 on lines through (1, 1) with slope p/q,
/// slopes ordered by max(|p|, q) and then by value. Duplicates are dropped.
std::vector<SquareTriple> squares_ap_triples(long count);

struct PowerCheckReport {
    bool first_coprime_to_difference = false;
    bool length_within_bound = false;
    bool has_zero_term = false;
    std::vector<long> unit_terms;           // indices of terms equal to +-1
    std::vector<long> perfect_power_terms;  // indices, ring sense (t^r, t non-unit)
    bool positive_integer_hypotheses = false;  // a, d > 0 and no term of the form t^r, t, r > 1
    bool ring_hypotheses = false;              // no units and no perfect powers among terms
    Integer product;
    bool product_is_perfect_power = false;

    bool hypotheses_hold() const { return positive_integer_hypotheses || ring_hypotheses; }
};

/// Checks that the product of a progression over Z is not a perfect power when
/// the hypotheses hold (asserted); hypothesis failures are reported, not thrown.
PowerCheckReport product_power_check(const ArithmeticProgression& ap);

}  // namespace apcoprime
