#pragma once

// Exact arithmetic in Z and in norm-Euclidean quadratic rings of integers
// O_K, K = Q(sqrt m). Elements are stored as coordinates (x, y) over the
// integral basis {1, w}:
//
//   OmegaSqrt:  w = sqrt(m),        w^2 = m             (m = 2, 3 mod 4)
//   OmegaHalf:  w = (1 + sqrt(m))/2, w^2 = w + (m-1)/4  (m = 1 mod 4)
//
// Z is represented with y = 0 throughout.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apcoprime/integer.hpp"

namespace apcoprime {

enum class RingKind { RationalIntegers, Quadratic };
enum class BasisConvention { OmegaSqrt, OmegaHalf };

/// Values of m admitted as quadratic rings. The defaults are the norm-Euclidean
/// imaginary and real quadratic fields.
struct RingAllowlist {
    std::vector<long> imaginary{-1, -2, -3, -7, -11};
    std::vector<long> real{2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29, 33, 37, 41, 57, 73};

    bool contains(long m) const;
    static const RingAllowlist& standard();
};

class RingDescriptor {
public:
    static RingDescriptor integers();
    /// Throws UnsupportedRingError unless m is squarefree, m != 0, 1 and allowlisted.
    static RingDescriptor quadratic(long m,
                                    const RingAllowlist& allow = RingAllowlist::standard());

    RingKind kind() const { return kind_; }
    bool is_integers() const { return kind_ == RingKind::RationalIntegers; }
    bool is_imaginary() const { return kind_ == RingKind::Quadratic && m_ < 0; }
    bool is_real() const { return kind_ == RingKind::Quadratic && m_ > 0; }
    long m() const { return m_; }
    BasisConvention basis() const { return basis_; }
    /// (m - 1)/4 for OmegaHalf, m for OmegaSqrt: w^2 = c + (OmegaHalf ? w : 0).
    long omega_square_constant() const;

    /// Fundamental unit eps > 1 of a real field, as (x, y) coordinates.
    std::pair<long, long> fundamental_unit() const { return {unit_x_, unit_y_}; }

    /// "Z" or "Q(sqrt m)".
    std::string tag() const;

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        return a.kind_ == b.kind_ && a.m_ == b.m_;
    }

private:
    RingKind kind_ = RingKind::RationalIntegers;
    long m_ = 0;
    BasisConvention basis_ = BasisConvention::OmegaSqrt;
    long unit_x_ = 1;
    long unit_y_ = 0;
};

/// Parses "Z", "Q(sqrt m)" and the aliases "gauss" (m = -1) and "eisenstein" (m = -3).
RingDescriptor parse_ring(const std::string& text,
                          const RingAllowlist& allow = RingAllowlist::standard());

class RingElement {
public:
    RingElement() : ring_(RingDescriptor::integers()) {}
    RingElement(RingDescriptor ring, Integer x, Integer y = 0);

    const RingDescriptor& ring() const { return ring_; }
    const Integer& x() const { return x_; }
    const Integer& y() const { return y_; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    RingElement operator-() const { return {ring_, -x_, -y_}; }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

private:
    RingDescriptor ring_;
    Integer x_;
    Integer y_;
};

RingElement embed_int(const Integer& k, const RingDescriptor& ring);
inline RingElement one(const RingDescriptor& ring) { return embed_int(1, ring); }
inline RingElement zero(const RingDescriptor& ring) { return embed_int(0, ring); }

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return sub(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
RingElement scale(const RingElement& a, const Integer& k);
RingElement power(const RingElement& a, unsigned long e);

/// Galois conjugate (sqrt m -> -sqrt m); identity on Z.
RingElement conjugate(const RingElement& a);

/// Field norm a * conj(a) as a rational integer (may be negative in real fields).
Integer norm(const RingElement& a);

bool is_unit(const RingElement& a);

struct DivMod {
    RingElement quotient;
    RingElement remainder;
};

/// a = q*b + r with |N(r)| < |N(b)|.
DivMod divmod(const RingElement& a, const RingElement& b);

/// Exact quotient a / b when b | a, otherwise nullopt. b must be nonzero.
std::optional<RingElement> exact_quotient(const RingElement& a, const RingElement& b);

/// b | a. 0 divides only 0.
bool divides(const RingElement& b, const RingElement& a);

bool are_associates(const RingElement& a, const RingElement& b);

struct CanonicalForm {
    RingElement value;  // the distinguished associate
    RingElement unit;   // value = unit * input (1 when input is 0)
};

/// Distinguished representative of the associate class: the lexicographic
/// maximum of (x, y) over unit multiples (real fields first normalize by the
/// fundamental unit into 1 <= |s1(a)/s2(a)| < eps^2).
CanonicalForm canonical_form(const RingElement& a);
RingElement canonical_associate(const RingElement& a);

/// Canonical greatest common divisor; gcd(0, 0) = 0.
RingElement gcd_ring(const RingElement& a, const RingElement& b);

/// True iff gcd_ring(a, b) is a unit, with a norm-gcd shortcut.
bool coprime(const RingElement& a, const RingElement& b);

struct RingBezout {
    RingElement g;
    RingElement s;
    RingElement t;
};

/// g = gcd_ring(a, b) and s*a + t*b = g.
RingBezout extended_gcd_ring(const RingElement& a, const RingElement& b);

enum class Splitting { Split, Ramified, Inert };

struct PrimesAbove {
    Integer p;
    Splitting splitting = Splitting::Inert;
    std::optional<RingElement> first;   // P (Split, Ramified)
    std::optional<RingElement> second;  // Q (Split)
};

/// Kummer-Dedekind factorization of p * 1_R from the minimal polynomial of w mod p.
PrimesAbove primes_above(const Integer& p, const RingDescriptor& ring);

/// Text form "x+y*w" ("x" when y = 0).
std::string format_element(const RingElement& a);

/// Grammar: INT | INT (+|-) INT*w, whitespace-insensitive.
RingElement parse_element(const std::string& text, const RingDescriptor& ring);

std::string to_string(Splitting s);

}  // namespace apcoprime
