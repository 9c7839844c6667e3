#include "apcoprime/crt.hpp"

#include "apcoprime/errors.hpp"

namespace apcoprime {

namespace {

/// Keeps residues small: least nonnegative residue in Z, a Euclidean remainder otherwise.
RingElement reduce(const RingElement& value, const RingElement& modulus) {
    if (value.ring().is_integers()) {
        const Integer m = abs(modulus.x());
        return embed_int(mod_floor(value.x(), m), value.ring());
    }
    return divmod(value, modulus).remainder;
}

}  // namespace

void validate_system(const CongruenceSystem& sys) {
    if (sys.empty()) throw PreconditionError("congruence system is empty");
    const RingDescriptor& ring = sys.front().modulus.ring();
    for (const auto& c : sys) {
        if (!(c.residue.ring() == ring) || !(c.modulus.ring() == ring))
            throw RingMismatchError("congruence system mixes rings");
        if (c.modulus.is_zero()) throw PreconditionError("congruence modulus must be nonzero");
    }
}

std::optional<IncompatiblePair> check_compatible(const CongruenceSystem& sys) {
    validate_system(sys);
    for (std::size_t i = 0; i < sys.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.size(); ++j) {
            const RingElement g = gcd_ring(sys[i].modulus, sys[j].modulus);
            if (!divides(g, sys[i].residue - sys[j].residue)) return IncompatiblePair{i + 1, j + 1};
        }
    }
    return std::nullopt;
}

std::optional<Congruence> merge_congruences(const Congruence& a, const Congruence& b) {
    const RingBezout bez = extended_gcd_ring(a.modulus, b.modulus);
    const auto shift = exact_quotient(b.residue - a.residue, bez.g);
    if (!shift) return std::nullopt;
    // z = u1 + v1*s*(u2 - u1)/g  modulo  v1*v2/g.
    const auto cofactor = exact_quotient(b.modulus, bez.g);
    APCOPRIME_ENSURE(cofactor.has_value(), "gcd must divide the modulus");
    Congruence merged{a.residue + a.modulus * bez.s * *shift, a.modulus * *cofactor};
    merged.residue = reduce(merged.residue, merged.modulus);
    return merged;
}

CrtOutcome solve(const CongruenceSystem& sys) {
    CrtOutcome out;
    if (auto w = check_compatible(sys)) {
        out.witness = *w;
        return out;
    }
    Congruence acc{reduce(sys.front().residue, sys.front().modulus), sys.front().modulus};
    for (std::size_t k = 1; k < sys.size(); ++k) {
        auto merged = merge_congruences(acc, sys[k]);
        APCOPRIME_ENSURE(merged.has_value(), "pairwise-compatible system failed to merge");
        acc = std::move(*merged);
    }
    if (acc.modulus.ring().is_integers()) {
        acc.modulus = embed_int(abs(acc.modulus.x()), acc.modulus.ring());
        acc.residue = reduce(acc.residue, acc.modulus);
    }
    APCOPRIME_ENSURE(satisfies(sys, acc.residue), "CRT solution fails substitution");
    out.solution = CrtSolution{acc.residue, acc.modulus};
    return out;
}

bool satisfies(const CongruenceSystem& sys, const RingElement& z) {
    for (const auto& c : sys)
        if (!divides(c.modulus, z - c.residue)) return false;
    return true;
}

}  // namespace apcoprime
