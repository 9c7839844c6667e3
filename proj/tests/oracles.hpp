#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// library's algorithms; everything is plain machine-integer enumeration.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace apcoprime::oracle {

/// Largest d dividing both, by scanning candidates.
inline long scan_gcd(long a, long b) {
    a = std::labs(a);
    b = std::labs(b);
    if (a == 0 && b == 0) return 0;
    long best = 1;
    const long top = std::max(a, b);
    for (long d = 1; d <= top; ++d)
        if (a % d == 0 && b % d == 0) best = d;
    return best;
}

inline long pow_mod(long base, long e, long m) {
    long r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    for (long i = 0; i < e; ++i) r = r * base % m;
    return r;
}

/// Euler's criterion a^((p-1)/2) mod p mapped to {-1, 0, 1}.
inline int euler_criterion(long a, long p) {
    const long r = pow_mod(a, (p - 1) / 2, p);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

inline long enumerate_order(long a, long n) {
    long x = ((a % n) + n) % n;
    long k = 1;
    for (long v = x; v != 1 % n; v = v * x % n) ++k;
    return k;
}

inline long count_phi(long n) {
    long c = 0;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

inline bool trial_prime(long n) {
    n = std::labs(n);
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Every t^r <= limit with t, r >= 2.
inline std::set<long> perfect_powers_up_to(long limit) {
    std::set<long> out;
    for (long t = 2; t * t <= limit; ++t)
        for (long v = t * t; v <= limit; v *= t) {
            out.insert(v);
            if (v > limit / t) break;
        }
    return out;
}

struct SmallCongruence {
    long residue;
    long modulus;  // positive
};

/// Least z in [0, lcm) satisfying every congruence, by scanning.
inline std::optional<long> scan_crt(const std::vector<SmallCongruence>& sys) {
    long l = 1;
    for (const auto& c : sys) l = std::lcm(l, c.modulus);
    for (long z = 0; z < l; ++z) {
        bool ok = true;
        for (const auto& c : sys) ok = ok && (((z - c.residue) % c.modulus) + c.modulus) % c.modulus == 0;
        if (ok) return z;
    }
    return std::nullopt;
}

/// Smallest index (1-based) of a term coprime to all others, over machine integers.
inline std::optional<long> scan_coprime_witness(long a, long d, long n) {
    for (long i = 0; i < n; ++i) {
        bool ok = true;
        for (long j = 0; j < n && ok; ++j)
            if (i != j) ok = std::gcd(a + i * d, a + j * d) == 1;
        if (ok) return i + 1;
    }
    return std::nullopt;
}

}  // namespace apcoprime::oracle
