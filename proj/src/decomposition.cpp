#include "apcoprime/decomposition.hpp"

#include <algorithm>

#include "apcoprime/errors.hpp"

namespace apcoprime {

DeltaResult delta_quadratic(long m, const RingAllowlist& allow) {
    // Validates squarefreeness and allowlist membership.
    (void)RingDescriptor::quadratic(m, allow);
    DeltaResult out;
    out.method = DeltaMethod::ClosedFormQuadratic;
    if (((m % 8) + 8) % 8 == 1) {
        out.prime = 2;
        return out;
    }
    // A prime with (m/p) = 1 always exists; scan until one is found.
    for (long p = 3;; p += 2) {
        if (!is_prime(Integer(p))) continue;
        if (legendre_symbol(Integer(m), Integer(p)) == 1) {
            out.prime = p;
            return out;
        }
    }
}

DeltaResult delta_cyclotomic(long m, long bound) {
    if (m < 1) throw PreconditionError("delta_cyclotomic: m must be >= 1");
    DeltaResult out;
    out.method = DeltaMethod::ClosedFormCyclotomic;
    out.bound = bound;
    for (long p : primes_in_range(2, bound)) {
        long l = m;
        while (l % p == 0) l /= p;
        if (l <= 1) continue;
        const Integer ell = l;
        if (!has_primitive_root(ell) || multiplicative_order(p, ell) < euler_phi(ell)) {
            out.prime = p;
            return out;
        }
    }
    return out;
}

DeltaResult delta_oracle(const RingDescriptor& ring, long bound) {
    if (bound < 2) throw PreconditionError("delta_oracle: bound must be >= 2");
    DeltaResult out;
    out.method = DeltaMethod::SplittingOracle;
    out.bound = bound;
    if (ring.is_integers()) return out;
    for (long p : primes_in_range(2, bound)) {
        if (primes_above(p, ring).splitting == Splitting::Split) {
            out.prime = p;
            return out;
        }
    }
    return out;
}

std::optional<long> delta_capped(const RingDescriptor& ring) {
    return delta_oracle(ring, kDeltaRelevantBound).prime;
}

const std::vector<long>& cyclotomic_ufd_conductors() {
    // Masley-Montgomery: the 30 cyclotomic fields of class number one.
    static const std::vector<long> kConductors = {1,  3,  4,  5,  7,  8,  9,  11, 12, 13,
                                                  15, 16, 17, 19, 20, 21, 24, 25, 27, 28,
                                                  32, 33, 35, 36, 40, 44, 45, 48, 60, 84};
    return kConductors;
}

bool cyclotomic_is_known_ufd(long m) {
    if (m < 1) return false;
    if (m % 4 == 2) m /= 2;  // Q(zeta_2k) = Q(zeta_k) for odd k
    const auto& c = cyclotomic_ufd_conductors();
    return std::find(c.begin(), c.end(), m) != c.end();
}

std::string to_string(DeltaMethod method) {
    switch (method) {
        case DeltaMethod::ClosedFormQuadratic: return "closed_form_quadratic";
        case DeltaMethod::ClosedFormCyclotomic: return "closed_form_cyclotomic";
        case DeltaMethod::SplittingOracle: return "splitting_oracle";
    }
    return "?";
}

}  // namespace apcoprime
