#pragma once

// Chinese remainder solver for systems z = u_i (mod v_i) whose moduli need
// not be pairwise coprime. Over a Euclidean ring every pair of moduli has a
// Bezout witness gcd(v_i, v_j) = s*v_i + t*v_j, and the system is solvable
// exactly when gcd(v_i, v_j) | u_i - u_j for every pair.

#include <optional>
#include <vector>

#include "apcoprime/ring.hpp"

namespace apcoprime {

struct Congruence {
    RingElement residue;
    RingElement modulus;
};

using CongruenceSystem = std::vector<Congruence>;

/// 1-based indices of a pair of congruences with gcd(v_i, v_j) not dividing u_i - u_j.
struct IncompatiblePair {
    std::size_t i = 0;
    std::size_t j = 0;
    friend bool operator==(const IncompatiblePair&, const IncompatiblePair&) = default;
};

struct CrtSolution {
    RingElement value;
    RingElement modulus;  // solutions are exactly value + modulus * R
};

struct CrtOutcome {
    std::optional<CrtSolution> solution;
    std::optional<IncompatiblePair> witness;

    bool solved() const { return solution.has_value(); }
};

/// Throws PreconditionError for an empty system, a zero modulus or mixed rings.
void validate_system(const CongruenceSystem& sys);

/// nullopt when every pair is compatible; otherwise the first violating pair.
std::optional<IncompatiblePair> check_compatible(const CongruenceSystem& sys);

/// Merges two congruences; nullopt iff they are incompatible.
std::optional<Congruence> merge_congruences(const Congruence& a, const Congruence& b);

/// Left-to-right pairwise merge. Every returned solution has been substituted
/// back into each congruence. Over Z the value is the least nonnegative residue
/// modulo the (positive) lcm.
CrtOutcome solve(const CongruenceSystem& sys);

/// z satisfies z = u (mod v) for every congruence.
bool satisfies(const CongruenceSystem& sys, const RingElement& z);

}  // namespace apcoprime
