#pragma once

#include <optional>
#include <vector>

#include "kt_hodge/exactmath/rational.hpp"

namespace kt_hodge {

struct PrimePower {
    BigInt prime;
    unsigned long exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; the empty list is the factorization of 1.
using Factorization = std::vector<PrimePower>;

/// Deterministic trial division; intended for desk-scale inputs.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (BigInt f = 3; f * f <= n; f += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) return false;
    }
    return true;
}

inline Factorization factorize(BigInt n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "factorize requires n >= 1");
    Factorization out;
    auto strip = [&](const BigInt& f) {
        unsigned long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
            n /= f;
            ++e;
        }
        if (e > 0) out.push_back({f, e});
    };
    strip(BigInt(2));
    for (BigInt f = 3; f * f <= n; f += 2) strip(f);
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline BigInt reconstruct(const Factorization& f) {
    BigInt out = 1;
    for (const auto& pp : f) {
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        out *= power;
    }
    return out;
}

/// Residue of a prime modulo 4 (0..3).
inline unsigned long mod4(const BigInt& p) { return mpz_fdiv_ui(p.get_mpz_t(), 4); }

/// Number of representations n = x^2 + y^2 over ordered signed pairs.
inline BigInt r2(const BigInt& n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "r2 requires n >= 0");
    if (n == 0) return 1;
    BigInt count = 4;
    for (const auto& [p, e] : factorize(n)) {
        unsigned long r = mod4(p);
        if (r == 3 && e % 2 == 1) return 0;
        if (r == 1) count *= BigInt(e + 1);
    }
    return count;
}

/// Largest s with s*s <= n.
inline BigInt isqrt(const BigInt& n) {
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    return isqrt(n);
}

/// Non-negative square root when numerator and denominator are both squares.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) throw Error(ErrorKind::InvalidArgument, "rational_sqrt requires r >= 0");
    auto n = exact_isqrt(r.num());
    auto d = exact_isqrt(r.den());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

} // namespace kt_hodge
