#pragma once

// Exact rational-integer primitives. Everything here is a pure function of
// its arguments; there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace apcoprime {

using Integer = mpz_class;

struct PrimePower {
    Integer prime;
    unsigned long exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    Integer product() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct BezoutResult {
    Integer g;
    Integer s;
    Integer t;
};

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd_int(const Integer& a, const Integer& b);

/// g = gcd_int(a, b) together with s*a + t*b = g.
BezoutResult extended_gcd_int(const Integer& a, const Integer& b);

Integer lcm_int(const Integer& a, const Integer& b);

/// Floor division and the matching nonnegative-for-positive-divisor modulus.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

/// Returns -1, 0 or +1. Requires p to be an odd prime.
int legendre_symbol(const Integer& a, const Integer& p);

/// True iff |n| is a rational prime. Deterministic below 3.3e24; above that a
/// BPSW test with extra Miller-Rabin rounds.
bool is_prime(const Integer& n);

/// Rejects n = 0.
Factorization factorize(const Integer& n);

Integer euler_phi(const Integer& n);

/// Least k >= 1 with a^k = 1 (mod n). Requires n >= 2 and gcd(a, n) = 1.
Integer multiplicative_order(const Integer& a, const Integer& n);

/// True iff (Z/nZ)^* is cyclic, i.e. n in {1, 2, 4, p^k, 2p^k} with p odd.
bool has_primitive_root(const Integer& n);

/// n = t^r with integers t > 1, r > 1. 0, 1 and negatives are not.
bool is_perfect_power_int(const Integer& n);

/// Ring-sense perfect power in Z: t^r with t a nonzero non-unit, r > 1.
/// Differs from is_perfect_power_int only for negative n (e.g. -8 = (-2)^3).
bool is_perfect_power_in_z(const Integer& n);

/// Integer r-th root of n >= 0 rounded down.
Integer integer_root(const Integer& n, unsigned long r);

/// Primes p with lo <= p <= hi, ascending.
std::vector<long> primes_in_range(long lo, long hi);

/// Parses a decimal integer with optional sign. Throws ParseError.
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& n);

/// Conversion at API boundaries that take machine integers; throws if n does
/// not fit in a long.
long to_long(const Integer& n);

}  // namespace apcoprime
