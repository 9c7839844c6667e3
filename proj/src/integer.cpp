#include "apcoprime/integer.hpp"

#include <algorithm>
#include <array>
#include <climits>

#include "apcoprime/errors.hpp"

namespace apcoprime {

Integer Factorization::product() const {
    Integer p = sign;
    for (const auto& pp : factors) {
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        p *= power;
    }
    return p;
}

Integer gcd_int(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BezoutResult extended_gcd_int(const Integer& a, const Integer& b) {
    BezoutResult r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return r;
}

Integer lcm_int(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw DivisionByZeroError("floor_div by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    if (b == 0) throw DivisionByZeroError("mod_floor by zero");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

int legendre_symbol(const Integer& a, const Integer& p) {
    if (p < 3 || !is_prime(p)) {
        throw PreconditionError("legendre_symbol: modulus " + to_string(p) +
                                " is not an odd prime");
    }
    // Binary Jacobi algorithm; for prime p it is the Legendre symbol.
    Integer x = mod_floor(a, p);
    Integer n = p;
    int result = 1;
    while (x != 0) {
        while (mpz_even_p(x.get_mpz_t())) {
            x /= 2;
            const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, n);
        if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            result = -result;
        x = mod_floor(x, n);
    }
    return n == 1 ? result : 0;
}

namespace {

constexpr std::array<unsigned long, 13> kWitnessBases = {2,  3,  5,  7,  11, 13, 17,
                                                         19, 23, 29, 31, 37, 41};

bool miller_rabin_round(const Integer& n, const Integer& odd_part, unsigned long twos,
                        unsigned long base) {
    const Integer nm1 = n - 1;
    Integer x;
    const Integer b = base;
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < twos; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

Integer pollard_brent(const Integer& n) {
    // Brent's cycle detection on x -> x^2 + c, restarting with a new c on failure.
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd_int(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = gcd_int(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Integer& value) {
    const Integer n = abs(value);
    if (n < 2) return false;
    for (unsigned long p : kWitnessBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // The first 13 prime bases are a deterministic witness set below 3.3e24.
    // Above that, BPSW plus random-base rounds; no counterexample is known.
    static const Integer kDeterministicLimit("3317044064679887385961981");
    if (n >= kDeterministicLimit) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    Integer odd_part = n - 1;
    unsigned long twos = 0;
    while (mpz_even_p(odd_part.get_mpz_t())) {
        odd_part /= 2;
        ++twos;
    }
    return std::all_of(kWitnessBases.begin(), kWitnessBases.end(), [&](unsigned long b) {
        return miller_rabin_round(n, odd_part, twos, b);
    });
}

Factorization factorize(const Integer& value) {
    if (value == 0) throw PreconditionError("factorize: zero has no factorization");
    Factorization f;
    f.sign = value < 0 ? -1 : 1;
    Integer n = abs(value);
    std::vector<Integer> primes;
    auto take = [&](unsigned long p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    };
    // Small primes by division, the rest by Pollard-Brent.
    static const std::vector<long> kSmallPrimes = primes_in_range(2, 10000);
    for (long p : kSmallPrimes) {
        if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
        take(static_cast<unsigned long>(p));
    }
    if (n > 1) factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

Integer euler_phi(const Integer& n) {
    if (n <= 0) throw PreconditionError("euler_phi: argument must be positive");
    Integer phi = n;
    for (const auto& pp : factorize(n).factors) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

Integer multiplicative_order(const Integer& a, const Integer& n) {
    if (n < 2) throw PreconditionError("multiplicative_order: modulus must be >= 2");
    if (gcd_int(a, n) != 1) {
        throw PreconditionError("multiplicative_order: gcd(" + to_string(a) + ", " +
                                to_string(n) + ") != 1");
    }
    const Integer base = mod_floor(a, n);
    Integer order = euler_phi(n);
    for (const auto& pp : factorize(order).factors) {
        for (unsigned long i = 0; i < pp.exponent; ++i) {
            const Integer candidate = order / pp.prime;
            Integer x;
            mpz_powm(x.get_mpz_t(), base.get_mpz_t(), candidate.get_mpz_t(),
                     n.get_mpz_t());
            if (x != 1) break;
            order = candidate;
        }
    }
    return order;
}

bool has_primitive_root(const Integer& n) {
    if (n <= 0) throw PreconditionError("has_primitive_root: argument must be positive");
    if (n == 1 || n == 2 || n == 4) return true;
    Integer m = n;
    if (mpz_even_p(m.get_mpz_t())) {
        m /= 2;
        if (mpz_even_p(m.get_mpz_t())) return false;
    }
    return factorize(m).factors.size() == 1;
}

Integer integer_root(const Integer& n, unsigned long r) {
    if (n < 0) throw PreconditionError("integer_root: negative radicand");
    if (r == 0) throw PreconditionError("integer_root: zeroth root");
    Integer root;
    mpz_root(root.get_mpz_t(), n.get_mpz_t(), r);
    return root;
}

bool is_perfect_power_int(const Integer& n) {
    if (n < 4) return false;
    const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long r = 2; r <= bits; ++r) {
        const Integer t = integer_root(n, r);
        if (t < 2) break;
        Integer back;
        mpz_pow_ui(back.get_mpz_t(), t.get_mpz_t(), r);
        if (back == n) return true;
    }
    return false;
}

bool is_perfect_power_in_z(const Integer& n) {
    if (n >= 0) return is_perfect_power_int(n);
    // -m = t^r needs r odd and t = -s with s^r = m.
    const Integer m = -n;
    if (m < 8) return false;
    const unsigned long bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (unsigned long r = 3; r <= bits; r += 2) {
        const Integer t = integer_root(m, r);
        if (t < 2) break;
        Integer back;
        mpz_pow_ui(back.get_mpz_t(), t.get_mpz_t(), r);
        if (back == m) return true;
    }
    return false;
}

std::vector<long> primes_in_range(long lo, long hi) {
    std::vector<long> out;
    if (hi < 2) return out;
    lo = std::max(lo, 2L);
    std::vector<bool> composite(static_cast<std::size_t>(hi + 1), false);
    for (long i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (long j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (long i = lo; i <= hi; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

Integer parse_integer(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    std::size_t start = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("not an integer: '" + text + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
}

std::string to_string(const Integer& n) { return n.get_str(); }

long to_long(const Integer& n) {
    if (!n.fits_slong_p()) throw PreconditionError("integer out of range: " + n.get_str());
    return n.get_si();
}

}  // namespace apcoprime
