#include "apcoprime/ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "apcoprime/errors.hpp"

namespace apcoprime {

namespace {

bool squarefree(long m) {
    if (m == 0) return false;
    for (const auto& pp : factorize(Integer(m)).factors)
        if (pp.exponent > 1) return false;
    return true;
}

/// Least eps = x + y*w > 1 with N(eps) = +-1, by scanning the sqrt(m)
/// coefficient upward.
std::pair<long, long> find_fundamental_unit(long m, BasisConvention basis) {
    constexpr long kSearchLimit = 10000000;
    for (long v = 1; v <= kSearchLimit; ++v) {
        for (int sign : {-1, 1}) {
            // OmegaSqrt: x^2 - m v^2 = +-1.  OmegaHalf: u^2 - m v^2 = +-4, eps = (u + v sqrt m)/2.
            const Integer target = Integer(m) * v * v +
                                   (basis == BasisConvention::OmegaSqrt ? sign : 4 * sign);
            if (target <= 0 || !mpz_perfect_square_p(target.get_mpz_t())) continue;
            const long u = to_long(sqrt(target));
            if (basis == BasisConvention::OmegaSqrt) return {u, v};
            return {(u - v) / 2, v};
        }
    }
    throw UnsupportedRingError("no fundamental unit found for Q(sqrt " + std::to_string(m) +
                               ") within the search limit");
}

void require_same_ring(const RingElement& a, const RingElement& b, const char* op) {
    if (!(a.ring() == b.ring())) {
        throw RingMismatchError(std::string(op) + ": operands from " + a.ring().tag() +
                                " and " + b.ring().tag());
    }
}

/// Nearest integer to num/den, ties toward negative infinity.
Integer round_nearest(Integer num, Integer den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer out;
    const Integer twice_num = 2 * num - den;
    const Integer twice_den = 2 * den;
    mpz_cdiv_q(out.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
    return out;
}

/// Sign of u*v where a = u + v*sqrt(m) (up to a positive factor). Positive means
/// |s1(a)| > |s2(a)| for the real embeddings s1 (sqrt m > 0) and s2.
int embedding_balance(const RingElement& a) {
    const Integer u = a.ring().basis() == BasisConvention::OmegaHalf ? 2 * a.x() + a.y() : a.x();
    return sgn(u) * sgn(a.y());
}

std::vector<RingElement> torsion_units(const RingDescriptor& ring) {
    std::vector<RingElement> units{one(ring), -one(ring)};
    if (ring.is_imaginary() && ring.m() == -1) {
        units.emplace_back(ring, 0, 1);
        units.emplace_back(ring, 0, -1);
    } else if (ring.is_imaginary() && ring.m() == -3) {
        // w = (1 + sqrt -3)/2 is a primitive sixth root of unity.
        units.emplace_back(ring, 0, 1);
        units.emplace_back(ring, 0, -1);
        units.emplace_back(ring, -1, 1);
        units.emplace_back(ring, 1, -1);
    }
    return units;
}

bool lex_greater(const RingElement& a, const RingElement& b) {
    return a.x() != b.x() ? a.x() > b.x() : a.y() > b.y();
}

}  // namespace

bool RingAllowlist::contains(long m) const {
    const auto& list = m < 0 ? imaginary : real;
    return std::find(list.begin(), list.end(), m) != list.end();
}

const RingAllowlist& RingAllowlist::standard() {
    static const RingAllowlist kStandard{};
    return kStandard;
}

RingDescriptor RingDescriptor::integers() { return RingDescriptor{}; }

RingDescriptor RingDescriptor::quadratic(long m, const RingAllowlist& allow) {
    if (m == 0 || m == 1 || !squarefree(m)) {
        throw UnsupportedRingError("Q(sqrt " + std::to_string(m) +
                                   "): m must be squarefree and different from 0, 1");
    }
    if (!allow.contains(m)) {
        throw UnsupportedRingError("Q(sqrt " + std::to_string(m) +
                                   ") is not on the norm-Euclidean allowlist");
    }
    RingDescriptor r;
    r.kind_ = RingKind::Quadratic;
    r.m_ = m;
    r.basis_ = (((m % 4) + 4) % 4 == 1) ? BasisConvention::OmegaHalf : BasisConvention::OmegaSqrt;
    if (m > 0) std::tie(r.unit_x_, r.unit_y_) = find_fundamental_unit(m, r.basis_);
    return r;
}

long RingDescriptor::omega_square_constant() const {
    if (kind_ == RingKind::RationalIntegers) return 0;
    return basis_ == BasisConvention::OmegaHalf ? (m_ - 1) / 4 : m_;
}

std::string RingDescriptor::tag() const {
    if (kind_ == RingKind::RationalIntegers) return "Z";
    return "Q(sqrt " + std::to_string(m_) + ")";
}

RingDescriptor parse_ring(const std::string& text, const RingAllowlist& allow) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "Z" || lower == "integers") return RingDescriptor::integers();
    if (lower == "gauss" || s == "Z[i]") return RingDescriptor::quadratic(-1, allow);
    if (lower == "eisenstein") return RingDescriptor::quadratic(-3, allow);
    const std::string prefix = "Q(sqrt";
    if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size() + 1 && s.back() == ')') {
        const Integer m = parse_integer(s.substr(prefix.size(), s.size() - prefix.size() - 1));
        return RingDescriptor::quadratic(to_long(m), allow);
    }
    throw ParseError("unrecognized ring '" + text + "' (expected Z, gauss, eisenstein or Q(sqrt m))");
}

RingElement::RingElement(RingDescriptor ring, Integer x, Integer y)
    : ring_(ring), x_(std::move(x)), y_(std::move(y)) {
    if (ring_.is_integers() && y_ != 0)
        throw PreconditionError("element of Z must have zero w-coordinate");
}

RingElement embed_int(const Integer& k, const RingDescriptor& ring) { return {ring, k, 0}; }

RingElement add(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "add");
    return {a.ring(), a.x() + b.x(), a.y() + b.y()};
}

RingElement sub(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "sub");
    return {a.ring(), a.x() - b.x(), a.y() - b.y()};
}

RingElement mul(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "mul");
    const RingDescriptor& ring = a.ring();
    if (ring.is_integers()) return {ring, a.x() * b.x(), 0};
    const long c = ring.omega_square_constant();
    const Integer yy = a.y() * b.y();
    Integer x = a.x() * b.x() + c * yy;
    Integer y = a.x() * b.y() + a.y() * b.x();
    if (ring.basis() == BasisConvention::OmegaHalf) y += yy;
    return {ring, std::move(x), std::move(y)};
}

RingElement scale(const RingElement& a, const Integer& k) {
    return {a.ring(), a.x() * k, a.y() * k};
}

RingElement power(const RingElement& a, unsigned long e) {
    RingElement result = one(a.ring());
    RingElement base = a;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

RingElement conjugate(const RingElement& a) {
    if (a.ring().is_integers()) return a;
    if (a.ring().basis() == BasisConvention::OmegaHalf)
        return {a.ring(), a.x() + a.y(), -a.y()};
    return {a.ring(), a.x(), -a.y()};
}

Integer norm(const RingElement& a) {
    const RingDescriptor& ring = a.ring();
    if (ring.is_integers()) return a.x() * a.x();
    const long c = ring.omega_square_constant();
    Integer n = a.x() * a.x() - c * a.y() * a.y();
    if (ring.basis() == BasisConvention::OmegaHalf) n += a.x() * a.y();
    return n;
}

bool is_unit(const RingElement& a) {
    if (a.ring().is_integers()) return a.x() == 1 || a.x() == -1;
    const Integer n = norm(a);
    return n == 1 || n == -1;
}

namespace {

/// Pairs (eps^k, eps^-k) for k = 0, +-1, ..., +-12; just (1, 1) outside real fields.
const std::vector<std::pair<RingElement, RingElement>>& unit_shifts(const RingDescriptor& ring) {
    thread_local std::map<long, std::vector<std::pair<RingElement, RingElement>>> cache;
    const long key = ring.is_integers() ? 0 : ring.m();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<RingElement, RingElement>> shifts{{one(ring), one(ring)}};
    if (ring.is_real()) {
        const auto [ux, uy] = ring.fundamental_unit();
        const RingElement eps(ring, ux, uy);
        const RingElement eps_inv = scale(conjugate(eps), norm(eps));
        RingElement up = one(ring), down = one(ring);
        for (int k = 1; k <= 12; ++k) {
            up = up * eps;
            down = down * eps_inv;
            shifts.emplace_back(up, down);
            shifts.emplace_back(down, up);
        }
    }
    return cache.emplace(key, std::move(shifts)).first->second;
}

}  // namespace

DivMod divmod(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "divmod");
    if (b.is_zero()) throw DivisionByZeroError("divmod: division by zero");
    const RingDescriptor& ring = a.ring();
    const Integer nb = norm(b);
    const Integer abs_nb = abs(nb);
    if (ring.is_integers()) {
        const Integer q = round_nearest(a.x(), b.x());
        RingElement quotient(ring, q);
        RingElement remainder(ring, a.x() - q * b.x());
        APCOPRIME_ENSURE(abs(norm(remainder)) < abs_nb, "divmod remainder not smaller");
        return {quotient, remainder};
    }
    const RingElement numerator = a * conjugate(b);
    RingElement q(ring, round_nearest(numerator.x(), nb), round_nearest(numerator.y(), nb));
    RingElement r = a - q * b;
    if (abs(norm(r)) < abs_nb) return {q, r};

    // Coordinate rounding is not always good enough (e.g. m = -11, or real
    // fields near their Euclidean minimum). Widen around the rounded quotient;
    // in real fields also around eps^k * (a/b), since the quotients that work
    // can lie far out along the unit hyperbola. For q' near eps^k * (a/b) the
    // quotient is eps^-k * q' and N(a - q b) = +-N(b) N(eps^k (a/b) - q').
    const auto& shifts = unit_shifts(ring);
    for (long radius = 1; radius <= 64; radius *= 2) {
        for (const auto& [forward, back] : shifts) {
            const RingElement shifted = forward * numerator;
            const Integer cx = round_nearest(shifted.x(), nb);
            const Integer cy = round_nearest(shifted.y(), nb);
            std::optional<DivMod> best;
            Integer best_norm;
            for (long i = -radius; i <= radius; ++i) {
                for (long j = -radius; j <= radius; ++j) {
                    RingElement cand = back * RingElement(ring, cx + i, cy + j);
                    RingElement rem = a - cand * b;
                    Integer rn = abs(norm(rem));
                    if (rn < abs_nb && (!best || rn < best_norm)) {
                        best_norm = rn;
                        best = DivMod{std::move(cand), std::move(rem)};
                    }
                }
            }
            if (best) return *best;
        }
    }
    throw InvariantViolation("divmod: no quotient with smaller remainder norm in " + ring.tag() +
                             " (ring is not norm-Euclidean?)");
}

std::optional<RingElement> exact_quotient(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "exact_quotient");
    if (b.is_zero()) throw DivisionByZeroError("exact_quotient: division by zero");
    const RingDescriptor& ring = a.ring();
    if (ring.is_integers()) {
        if (!mpz_divisible_p(a.x().get_mpz_t(), b.x().get_mpz_t())) return std::nullopt;
        return RingElement(ring, a.x() / b.x());
    }
    const Integer nb = norm(b);
    const RingElement numerator = a * conjugate(b);
    if (!mpz_divisible_p(numerator.x().get_mpz_t(), nb.get_mpz_t()) ||
        !mpz_divisible_p(numerator.y().get_mpz_t(), nb.get_mpz_t())) {
        return std::nullopt;
    }
    return RingElement(ring, numerator.x() / nb, numerator.y() / nb);
}

bool divides(const RingElement& b, const RingElement& a) {
    if (b.is_zero()) return a.is_zero();
    return exact_quotient(a, b).has_value();
}

bool are_associates(const RingElement& a, const RingElement& b) {
    return canonical_associate(a) == canonical_associate(b);
}

CanonicalForm canonical_form(const RingElement& a) {
    const RingDescriptor& ring = a.ring();
    if (a.is_zero()) return {a, one(ring)};
    if (ring.is_integers()) {
        return a.x() < 0 ? CanonicalForm{-a, -one(ring)} : CanonicalForm{a, one(ring)};
    }
    RingElement value = a;
    RingElement unit = one(ring);
    if (ring.is_real()) {
        const auto [ex, ey] = ring.fundamental_unit();
        const RingElement eps(ring, ex, ey);
        const RingElement eps_inv = scale(conjugate(eps), norm(eps));
        while (embedding_balance(value) < 0) {
            value = value * eps;
            unit = unit * eps;
        }
        for (RingElement down = value * eps_inv; embedding_balance(down) >= 0;
             down = value * eps_inv) {
            value = std::move(down);
            unit = unit * eps_inv;
        }
    }
    RingElement best = value;
    RingElement best_unit = one(ring);
    for (const auto& u : torsion_units(ring)) {
        RingElement cand = value * u;
        if (lex_greater(cand, best)) {
            best = std::move(cand);
            best_unit = u;
        }
    }
    return {best, unit * best_unit};
}

RingElement canonical_associate(const RingElement& a) { return canonical_form(a).value; }

RingElement gcd_ring(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "gcd_ring");
    if (a.ring().is_integers()) return {a.ring(), gcd_int(a.x(), b.x())};
    RingElement r0 = a, r1 = b;
    while (!r1.is_zero()) {
        RingElement r2 = divmod(r0, r1).remainder;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return canonical_associate(r0);
}

bool coprime(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "coprime");
    if (a.ring().is_integers()) return gcd_int(a.x(), b.x()) == 1;
    // A common prime divisor divides both norms.
    if (gcd_int(norm(a), norm(b)) == 1) return true;
    return is_unit(gcd_ring(a, b));
}

RingBezout extended_gcd_ring(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "extended_gcd_ring");
    const RingDescriptor& ring = a.ring();
    RingElement r0 = a, r1 = b;
    RingElement s0 = one(ring), s1 = zero(ring);
    RingElement t0 = zero(ring), t1 = one(ring);
    while (!r1.is_zero()) {
        const RingElement q = divmod(r0, r1).quotient;
        RingElement r2 = r0 - q * r1;
        RingElement s2 = s0 - q * s1;
        RingElement t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const CanonicalForm cf = canonical_form(r0);
    RingBezout out{cf.value, cf.unit * s0, cf.unit * t0};
    APCOPRIME_ENSURE(out.s * a + out.t * b == out.g, "Bezout identity");
    return out;
}

PrimesAbove primes_above(const Integer& p, const RingDescriptor& ring) {
    if (p < 2 || !is_prime(p)) throw PreconditionError("primes_above: " + to_string(p) + " is not a prime");
    PrimesAbove out;
    out.p = p;
    if (ring.is_integers()) return out;  // p stays prime in Z

    // Roots of the minimal polynomial of w mod p: X^2 - m or X^2 - X - (m-1)/4.
    const long pl = to_long(p);
    const Integer c = ring.omega_square_constant();
    const bool half = ring.basis() == BasisConvention::OmegaHalf;
    std::vector<long> roots;
    for (long r = 0; r < pl && roots.size() < 2; ++r) {
        Integer f = Integer(r) * r - c;
        if (half) f -= r;
        if (mpz_divisible_p(f.get_mpz_t(), p.get_mpz_t())) roots.push_back(r);
    }
    const RingElement p_elem = embed_int(p, ring);
    auto prime_for_root = [&](long r) {
        return gcd_ring(p_elem, RingElement(ring, -r, 1));
    };
    if (roots.size() == 2) {
        out.splitting = Splitting::Split;
        out.first = prime_for_root(roots[0]);
        out.second = prime_for_root(roots[1]);
        APCOPRIME_ENSURE(abs(norm(*out.first)) == p && abs(norm(*out.second)) == p,
                         "split primes must have norm +-p");
        APCOPRIME_ENSURE(!are_associates(*out.first, *out.second), "split primes must differ");
        APCOPRIME_ENSURE(are_associates(*out.first * *out.second, p_elem), "P*Q ~ p");
    } else if (roots.size() == 1) {
        out.splitting = Splitting::Ramified;
        out.first = prime_for_root(roots[0]);
        APCOPRIME_ENSURE(are_associates(*out.first * *out.first, p_elem), "P^2 ~ p");
    }
    return out;
}

std::string format_element(const RingElement& a) {
    std::string s = a.x().get_str();
    if (a.y() == 0) return s;
    s += a.y() > 0 ? "+" : "-";
    s += Integer(abs(a.y())).get_str();
    s += "*w";
    return s;
}

RingElement parse_element(const std::string& text, const RingDescriptor& ring) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.substr(s.size() - 2) != "*w") return embed_int(parse_integer(s), ring);

    const std::size_t split = s.find_first_of("+-", 1);
    if (split == std::string::npos || split + 2 >= s.size())
        throw ParseError("malformed ring element '" + text + "' (expected x+y*w)");
    const Integer x = parse_integer(s.substr(0, split));
    Integer y = parse_integer(s.substr(split + 1, s.size() - 2 - (split + 1)));
    if (s[split] == '-') y = -y;
    if (ring.is_integers() && y != 0)
        throw ParseError("'" + text + "' has a w-coordinate but the ring is Z");
    return {ring, x, y};
}

std::string to_string(Splitting s) {
    switch (s) {
        case Splitting::Split: return "split";
        case Splitting::Ramified: return "ramified";
        case Splitting::Inert: return "inert";
    }
    return "?";
}

}  // namespace apcoprime
