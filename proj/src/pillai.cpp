#include "apcoprime/pillai.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <thread>

#include "apcoprime/decomposition.hpp"
#include "apcoprime/errors.hpp"

namespace apcoprime {

ArithmeticProgression::ArithmeticProgression(RingElement first, RingElement difference,
                                             long length)
    : first_(std::move(first)), difference_(std::move(difference)), length_(length) {
    if (length_ < 1) throw PreconditionError("progression length must be >= 1");
    if (!(first_.ring() == difference_.ring()))
        throw RingMismatchError("progression first term and difference lie in different rings");
}

RingElement ArithmeticProgression::term(long i) const {
    if (i < 1 || i > length_)
        throw PreconditionError("term index " + std::to_string(i) + " outside 1.." +
                                std::to_string(length_));
    return first_ + scale(difference_, i - 1);
}

std::vector<RingElement> ArithmeticProgression::terms() const {
    std::vector<RingElement> out;
    out.reserve(static_cast<std::size_t>(length_));
    RingElement t = first_;
    for (long i = 0; i < length_; ++i) {
        out.push_back(t);
        t = t + difference_;
    }
    return out;
}

std::vector<RingElement> multiples(const RingElement& r, const std::vector<RingElement>& items) {
    if (r.is_zero()) throw DivisionByZeroError("multiples: r must be nonzero");
    std::vector<RingElement> out;
    std::copy_if(items.begin(), items.end(), std::back_inserter(out),
                 [&](const RingElement& s) { return divides(r, s); });
    return out;
}

bool coprime_to_all(long index, const ArithmeticProgression& ap) {
    const RingElement x = ap.term(index);
    const auto terms = ap.terms();
    for (long j = 1; j <= ap.length(); ++j) {
        if (j != index && !coprime(x, terms[static_cast<std::size_t>(j - 1)])) return false;
    }
    return true;
}

CoprimeReport find_coprime_term(const ArithmeticProgression& ap) {
    if (!coprime(ap.first(), ap.difference()))
        throw PreconditionError("first term and difference are not coprime");
    const auto terms = ap.terms();
    const long n = ap.length();
    CoprimeReport report;
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (!coprime(terms[static_cast<std::size_t>(i - 1)],
                         terms[static_cast<std::size_t>(j - 1)])) {
                report.offenders[i] = j;
                break;
            }
        }
        if (!report.witness && !report.offenders.count(i)) report.witness = i;
    }
    return report;
}

long max_guaranteed_length(const RingDescriptor& ring) {
    const auto delta = delta_capped(ring);
    return delta ? std::min(kPillaiBound, 1 + *delta) : kPillaiBound;
}

namespace {

struct SweepChunk {
    std::uint64_t pairs = 0;
    std::uint64_t progressions = 0;
    std::optional<SweepViolation> violation;
};

/// For the first n_max terms, first_bad[i] is the least j != i whose term
/// shares a non-unit factor with term i. A progression of length n has a
/// coprime term iff some i < n has first_bad[i] >= n (0-based).
bool check_pair(const RingElement& a, const RingElement& d, long n_max, SweepChunk& chunk) {
    ++chunk.pairs;
    std::vector<RingElement> terms;
    terms.reserve(static_cast<std::size_t>(n_max));
    RingElement t = a;
    for (long i = 0; i < n_max; ++i) {
        terms.push_back(t);
        t = t + d;
    }
    std::vector<long> first_bad(static_cast<std::size_t>(n_max), n_max);
    for (long i = 0; i < n_max; ++i) {
        for (long j = i + 1; j < n_max; ++j) {
            if (first_bad[i] <= j && first_bad[j] <= i) continue;
            if (!coprime(terms[i], terms[j])) {
                first_bad[i] = std::min(first_bad[i], j);
                first_bad[j] = std::min(first_bad[j], i);
            }
        }
    }
    for (long n = 2; n <= n_max; ++n) {
        ++chunk.progressions;
        bool found = false;
        for (long i = 0; i < n && !found; ++i) found = first_bad[i] >= n;
        if (!found) {
            chunk.violation = SweepViolation{a, d, n};
            return false;
        }
    }
    return true;
}

void sweep_rows(const RingDescriptor& ring, long bound, long n_max, long row_lo, long row_hi,
                SweepChunk& chunk) {
    if (ring.is_integers()) {
        for (long a = row_lo; a <= row_hi; ++a) {
            for (long d = 0; d <= bound; ++d) {
                if (d == 0 && a != 1) continue;
                if (gcd_int(a, d) != 1) continue;
                if (!check_pair(embed_int(a, ring), embed_int(d, ring), n_max, chunk)) return;
            }
        }
        return;
    }
    for (long ax = row_lo; ax <= row_hi; ++ax)
        for (long ay = -bound; ay <= bound; ++ay) {
            const RingElement a(ring, ax, ay);
            for (long dx = -bound; dx <= bound; ++dx)
                for (long dy = -bound; dy <= bound; ++dy) {
                    const RingElement d(ring, dx, dy);
                    if (!coprime(a, d)) continue;
                    if (!check_pair(a, d, n_max, chunk)) return;
                }
        }
}

}  // namespace

SweepReport verify_bound_sweep(const RingDescriptor& ring, long coord_bound, long n_max,
                               unsigned jobs) {
    if (coord_bound < 0) throw PreconditionError("coordinate bound must be nonnegative");
    const long limit = max_guaranteed_length(ring);
    if (n_max < 1 || n_max > limit) {
        throw PreconditionError("n_max must lie in 1.." + std::to_string(limit) + " for " +
                                ring.tag());
    }
    SweepReport report;
    report.ring = ring;
    report.coord_bound = coord_bound;
    report.n_max = n_max;

    const long rows = 2 * coord_bound + 1;
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(rows)));
    std::vector<SweepChunk> chunks(jobs);
    auto run = [&](unsigned k) {
        const long lo = -coord_bound + rows * k / jobs;
        const long hi = -coord_bound + rows * (k + 1) / jobs - 1;
        sweep_rows(ring, coord_bound, n_max, lo, hi, chunks[k]);
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned k = 0; k < jobs; ++k) workers.emplace_back(run, k);
    }
    for (const auto& c : chunks) {
        report.pairs_checked += c.pairs;
        report.progressions_checked += c.progressions;
        if (c.violation && report.violations.empty()) report.violations.push_back(*c.violation);
    }
    return report;
}

RingCounterexample construct_counterexample_ring(const RingDescriptor& ring, long n) {
    const auto delta = delta_capped(ring);
    if (!delta)
        throw PreconditionError("decomposition number of " + ring.tag() +
                                " exceeds 13; no construction below length 17");
    if (!(1 + *delta < n && n < 17)) {
        throw PreconditionError("length must satisfy " + std::to_string(1 + *delta) +
                                " < n < 17 for " + ring.tag());
    }
    const PrimesAbove split = primes_above(*delta, ring);
    APCOPRIME_ENSURE(split.splitting == Splitting::Split, "delta must split");
    const RingElement& p_prime = *split.first;
    const RingElement& q_prime = *split.second;

    constexpr long kPrimorial13 = 2L * 3 * 5 * 7 * 11 * 13;
    const RingElement modulus = embed_int(kPrimorial13 / *delta, ring) * p_prime;
    const CongruenceSystem sys{{zero(ring), modulus}, {-one(ring), q_prime}};
    const CrtOutcome solved = solve(sys);
    APCOPRIME_ENSURE(solved.solved(), "counterexample congruences must be compatible");

    ArithmeticProgression ap(solved.solution->value, one(ring), n);
    APCOPRIME_ENSURE(coprime(ap.first(), ap.difference()), "gcd(z, 1) must be a unit");
    APCOPRIME_ENSURE(!find_coprime_term(ap).witness, "constructed progression has a coprime term");
    return {std::move(ap), *delta, p_prime, q_prime, modulus};
}

bool consecutive_block_has_coprime(const Integer& start, long n) {
    if (n < 1) throw PreconditionError("block length must be >= 1");
    // gcd(y, y+k) divides k, so only primes below n can be shared.
    const auto primes = primes_in_range(2, n - 1);
    const Integer last = start + (n - 1);
    auto multiples_in_block = [&](long p) -> Integer {
        return floor_div(last, p) - floor_div(start - 1, p);
    };
    std::vector<bool> shared(primes.size());
    for (std::size_t k = 0; k < primes.size(); ++k) shared[k] = multiples_in_block(primes[k]) >= 2;
    for (long i = 0; i < n; ++i) {
        const Integer y = start + i;
        bool ok = true;
        for (std::size_t k = 0; k < primes.size() && ok; ++k)
            ok = !(shared[k] && mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(primes[k])));
        if (ok) return true;
    }
    return false;
}

std::optional<Integer> search_counterexample_consecutive(long n, const Integer& scan_limit) {
    if (n <= kPillaiBound)
        throw PreconditionError("every block of at most 16 consecutive integers has a coprime element");
    const auto primes = primes_in_range(2, n - 1);
    const long limit = to_long(scan_limit);
    for (long x = 1; x <= limit; ++x) {
        bool has_coprime = false;
        for (long i = 0; i < n && !has_coprime; ++i) {
            const long y = x + i;
            bool ok = true;
            for (long p : primes) {
                if (y % p != 0) continue;
                // another multiple of p inside [x, x+n-1]?
                if (y - p >= x || y + p <= x + n - 1) {
                    ok = false;
                    break;
                }
            }
            has_coprime = ok;
        }
        if (!has_coprime) {
            APCOPRIME_ENSURE(!consecutive_block_has_coprime(x, n), "block check disagreement");
            return Integer(x);
        }
    }
    return std::nullopt;
}

Integer transfer_ap_to_consecutive(const ArithmeticProgression& ap) {
    if (!ap.ring().is_integers()) throw PreconditionError("transfer requires a progression over Z");
    if (!coprime(ap.first(), ap.difference()))
        throw PreconditionError("first term and difference are not coprime");
    const auto terms = ap.terms();
    const RingDescriptor& ring = ap.ring();
    Integer z;
    const auto zero_term = std::find_if(terms.begin(), terms.end(),
                                        [](const RingElement& t) { return t.is_zero(); });
    if (zero_term != terms.end()) {
        // 0 | z - k forces z = k.
        z = static_cast<long>(zero_term - terms.begin()) + 1;
    } else {
        CongruenceSystem sys;
        for (std::size_t i = 0; i < terms.size(); ++i)
            sys.push_back({embed_int(static_cast<long>(i) + 1, ring), terms[i]});
        const CrtOutcome out = solve(sys);
        APCOPRIME_ENSURE(out.solved(), "transfer system must be solvable for coprime (a, d)");
        z = out.solution->value.x();
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        APCOPRIME_ENSURE(divides(terms[i], embed_int(z - (static_cast<long>(i) + 1), ring)),
                         "term(i) must divide z - i");
    }
    return z;
}

std::vector<SquareTriple> squares_ap_triples(long count) {
    if (count < 1) throw PreconditionError("count must be >= 1");
    std::vector<SquareTriple> out;
    std::set<SquareTriple> seen;
    for (long h = 1; static_cast<long>(out.size()) < count; ++h) {
        std::vector<std::pair<long, long>> slopes;  // (p, q) with max(|p|, q) = h
        for (long q = 1; q <= h; ++q)
            for (long p = -h; p <= h; ++p)
                if (std::max(std::labs(p), q) == h && std::gcd(std::labs(p), q) == 1)
                    slopes.emplace_back(p, q);
        std::sort(slopes.begin(), slopes.end(), [](const auto& l, const auto& r) {
            return l.first * r.second < r.first * l.second;
        });
        for (const auto& [p, q] : slopes) {
            // Second intersection with x^2 + y^2 = 2 of the line through (1, 1):
            // x = (p^2 - 2pq - q^2)/(p^2 + q^2), y = (q^2 - 2pq - p^2)/(p^2 + q^2).
            const Integer P = p, Q = q;
            Integer a = abs(P * P - 2 * P * Q - Q * Q);
            Integer c = abs(Q * Q - 2 * P * Q - P * P);
            Integer b = P * P + Q * Q;
            const Integer g = gcd_int(gcd_int(a, b), c);
            a /= g;
            b /= g;
            c /= g;
            if (a == c) continue;  // the constant progression 1, 1, 1
            if (a > c) std::swap(a, c);
            SquareTriple t{a * a, b * b, c * c};
            if (!seen.insert(t).second) continue;
            APCOPRIME_ENSURE(t.s1 + t.s3 == 2 * t.s2, "squares must form a progression");
            out.push_back(std::move(t));
            if (static_cast<long>(out.size()) == count) break;
        }
    }
    return out;
}

PowerCheckReport product_power_check(const ArithmeticProgression& ap) {
    if (!ap.ring().is_integers()) throw PreconditionError("power check requires a progression over Z");
    PowerCheckReport r;
    r.first_coprime_to_difference = coprime(ap.first(), ap.difference());
    r.length_within_bound = ap.length() <= kPillaiBound;
    const auto terms = ap.terms();
    r.product = 1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Integer& v = terms[i].x();
        const long index = static_cast<long>(i) + 1;
        if (v == 0) r.has_zero_term = true;
        if (v == 1 || v == -1) r.unit_terms.push_back(index);
        if (is_perfect_power_in_z(v)) r.perfect_power_terms.push_back(index);
        r.product *= v;
    }
    const bool base = r.first_coprime_to_difference && r.length_within_bound &&
                      r.perfect_power_terms.empty();
    r.positive_integer_hypotheses = base && ap.first().x() > 0 && ap.difference().x() > 0;
    r.ring_hypotheses = base && r.unit_terms.empty();
    // 0 is not a perfect power by definition.
    r.product_is_perfect_power = is_perfect_power_in_z(r.product);
    APCOPRIME_ENSURE(!(r.hypotheses_hold() && r.product_is_perfect_power),
                     "product of a qualifying progression is a perfect power");
    return r;
}

}  // namespace apcoprime
