#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "vps/errors.hpp"

namespace vps {

// Exact scalars.  Two fields are supported: Q (arbitrary-precision
// rationals, GMP-backed, always canonical with positive denominator)
// and F_p for an odd prime p < 2^31.

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    require(den != 0, ErrorKind::SyntaxError, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat inverse(const Rat& x) {
    require(!is_zero(x), ErrorKind::Internal, "division by zero");
    return 1 / x;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Element of F_p.  prime == 0 marks an integer literal that adopts the
// field of the other operand; genuinely mismatched primes are an error.
struct Fp {
    std::int64_t value = 0;
    std::uint32_t prime = 0;

    Fp() = default;
    Fp(std::int64_t v, std::uint32_t p) : value(v), prime(p) { reduce(); }
    explicit Fp(std::int64_t v) : value(v), prime(0) {}

    void reduce() {
        if (prime != 0) {
            value %= static_cast<std::int64_t>(prime);
            if (value < 0) value += prime;
        }
    }

    static std::uint32_t join(const Fp& a, const Fp& b) {
        if (a.prime == b.prime) return a.prime;
        if (a.prime == 0) return b.prime;
        if (b.prime == 0) return a.prime;
        fail(ErrorKind::FieldMismatch, "operands live in F_" + std::to_string(a.prime) +
                                           " and F_" + std::to_string(b.prime));
    }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.value + b.value, join(a, b)); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.value - b.value, join(a, b)); }
    friend Fp operator-(const Fp& a) { return Fp(-a.value, a.prime); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.value * b.value, join(a, b)); }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint32_t p = join(a, b);
        if (p == 0) return a.value == b.value;
        return Fp(a.value, p).value == Fp(b.value, p).value;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline bool is_zero(const Fp& x) {
    return x.prime == 0 ? x.value == 0 : x.value % static_cast<std::int64_t>(x.prime) == 0;
}

inline Fp inverse(const Fp& x) {
    require(x.prime != 0, ErrorKind::FieldMismatch, "inverse needs a bound prime");
    require(!is_zero(x), ErrorKind::Internal, "division by zero in F_p");
    // extended Euclid
    std::int64_t a = x.value, m = x.prime, u = 1, v = 0;
    while (a != 0) {
        std::int64_t q = m / a;
        m -= q * a; std::swap(a, m);
        v -= q * u; std::swap(u, v);
    }
    return Fp(v, x.prime);
}

inline std::string to_string(const Fp& x) { return std::to_string(x.value); }

// Field-generic helpers used by the templated linear algebra.
template <typename K> inline K field_zero(const K& like);
template <> inline Rat field_zero<Rat>(const Rat&) { return Rat(0); }
template <> inline Fp field_zero<Fp>(const Fp& like) { return Fp(0, like.prime); }

template <typename K> inline K field_one(const K& like);
template <> inline Rat field_one<Rat>(const Rat&) { return Rat(1); }
template <> inline Fp field_one<Fp>(const Fp& like) { return Fp(1, like.prime); }

}  // namespace vps
