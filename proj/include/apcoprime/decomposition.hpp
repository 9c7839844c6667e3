#pragma once

// Decomposition number: the least rational prime p such that p * 1_R is
// divisible by two non-associate prime elements of R (infinite if none).

#include <optional>
#include <string>
#include <vector>

#include "apcoprime/integer.hpp"
#include "apcoprime/ring.hpp"

namespace apcoprime {

enum class DeltaMethod { ClosedFormQuadratic, ClosedFormCyclotomic, SplittingOracle };

struct DeltaResult {
    std::optional<long> prime;  // nullopt: infinite, or beyond `bound`
    long bound = 0;             // search bound used when `prime` is empty
    DeltaMethod method = DeltaMethod::SplittingOracle;

    bool is_finite() const { return prime.has_value(); }
    friend bool operator==(const DeltaResult&, const DeltaResult&) = default;
};

/// The search bound beyond which decomposition numbers cannot change which
/// progression lengths admit a coprime term.
inline constexpr long kDeltaRelevantBound = 13;
inline constexpr long kDefaultCyclotomicBound = 100000;

/// 2 if m = 1 (mod 8), else the least odd prime p with (m/p) = 1.
DeltaResult delta_quadratic(long m, const RingAllowlist& allow = RingAllowlist::standard());

/// Least prime p with l = m / p^{v_p(m)} > 1 and p not a primitive root mod l.
/// When (Z/lZ)^* is not cyclic no primitive root exists and p qualifies.
DeltaResult delta_cyclotomic(long m, long bound = kDefaultCyclotomicBound);

/// Least prime p <= bound that splits in `ring`.
DeltaResult delta_oracle(const RingDescriptor& ring, long bound);

/// delta_R if it is at most 13, else nullopt (which also covers infinity).
std::optional<long> delta_capped(const RingDescriptor& ring);

/// Values of m (not congruent to 2 mod 4) for which Z[zeta_m] is a UFD.
const std::vector<long>& cyclotomic_ufd_conductors();
bool cyclotomic_is_known_ufd(long m);

std::string to_string(DeltaMethod method);

}  // namespace apcoprime
