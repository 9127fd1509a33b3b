#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kt_hodge/exactmath/number_theory.hpp"
#include "kt_hodge/exactmath/rational.hpp"

// Lattice points on the circle centred at (d, 0) with radius d, i.e. integer
// (l, m) with (l - d)^2 + m^2 = d^2, and the variant with the m-axis stretched
// by sqrt(rho): m^2 = rho * l * (2d - l).

namespace kt_hodge {

struct LatticePoint {
    long long l = 0;
    long long m = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticeCount {
    std::size_t count = 0;
    std::vector<LatticePoint> points;  // sorted lexicographically by (l, m)
    bool points_complete = true;       // false when coordinates overflow 64 bits

    std::size_t axis_points() const {
        return static_cast<std::size_t>(
            std::count_if(points.begin(), points.end(), [](const LatticePoint& pt) { return pt.m == 0; }));
    }
};

namespace detail {

using i128 = __int128;

// Exact integer square root of a non-negative 128-bit value, or -1.
inline long long exact_isqrt128(i128 n) {
    if (n < 0) return -1;
    if (n == 0) return 0;
    auto s = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s * s == n ? static_cast<long long>(s) : -1;
}

inline constexpr long long kMaxScan = 1LL << 32;

struct Fraction64 {
    long long p;
    long long q;
};

// Enumeration bounds: |p| small enough that l*(2p - q*l) stays inside 128 bits
// with room to spare, and a scan length that is at least conceivable.
inline Fraction64 to_fraction64(const Rational& d) {
    constexpr long kLimit = 1L << 40;
    BigInt p = d.num();
    BigInt q = d.den();
    if (abs(p) > kLimit || q > kLimit) {
        throw Error(ErrorKind::InvalidArgument, "parameter " + d.str() + " too large for enumeration");
    }
    return {p.get_si(), q.get_si()};
}

inline void scan_range(const Fraction64& d, const std::function<void(long long)>& visit) {
    // l runs over the closed interval between 0 and 2d.
    long long lo = 0;
    long long hi = 0;
    if (d.p > 0) {
        hi = (2 * d.p) / d.q;
    } else {
        lo = -((-2 * d.p) / d.q);
    }
    for (long long l = lo; l <= hi; ++l) visit(l);
}

inline void push_pair(std::vector<LatticePoint>& pts, long long l, long long m) {
    pts.push_back({l, m});
    if (m != 0) pts.push_back({l, -m});
}

inline LatticeCount finish(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    LatticeCount out;
    out.count = pts.size();
    out.points = std::move(pts);
    return out;
}

} // namespace detail

/// Brute-force enumeration on the cleared-denominator form (ql - p)^2 + (qm)^2 = p^2.
inline LatticeCount circle_count_brute(const Rational& d) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroParameter, "d must be nonzero");
    auto f = detail::to_fraction64(d);
    if (2 * std::llabs(f.p) / f.q > detail::kMaxScan) {
        throw Error(ErrorKind::InvalidArgument, "scan over l too long for d = " + d.str());
    }
    std::vector<LatticePoint> pts;
    detail::scan_range(f, [&](long long l) {
        // m^2 = l (2d - l) = l (2p - q l) / q
        detail::i128 num = static_cast<detail::i128>(l) * (2 * static_cast<detail::i128>(f.p) - static_cast<detail::i128>(f.q) * l);
        if (num % f.q != 0) return;
        long long m = detail::exact_isqrt128(num / f.q);
        if (m >= 0) detail::push_pair(pts, l, m);
    });
    return detail::finish(std::move(pts));
}

/**
 * Closed-form count for d = p/q with q <= 5: with beta_j the exponents in p^2
 * of the primes congruent to 1 mod 4, the count is c * prod (beta_j + 1) with
 * c = 4, 2, 1, 1, 1 for q = 1..5.
 */
inline BigInt circle_count_closed(const Rational& d) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroParameter, "d must be nonzero");
    BigInt q = d.den();
    if (q > 5) {
        throw Error(ErrorKind::UnsupportedDenominator,
                    "closed form requires denominator <= 5, got " + q.get_str());
    }
    static constexpr unsigned long kLeading[] = {0, 4, 2, 1, 1, 1};
    BigInt count = kLeading[q.get_ui()];
    for (const auto& [prime, e] : factorize(abs(d.num()))) {
        if (mod4(prime) == 1) count *= BigInt(2 * e + 1);
    }
    return count;
}

namespace detail {

using Gaussian = std::pair<BigInt, BigInt>;

inline Gaussian gmul(const Gaussian& a, const Gaussian& b) {
    return {a.first * b.first - a.second * b.second, a.first * b.second + a.second * b.first};
}

inline Gaussian gpow(const Gaussian& a, unsigned long e) {
    Gaussian r{BigInt(1), BigInt(0)};
    for (unsigned long i = 0; i < e; ++i) r = gmul(r, a);
    return r;
}

// a^2 + b^2 = prime for a prime congruent to 1 mod 4.
inline Gaussian two_square_split(const BigInt& prime) {
    for (BigInt a = 1; a * a < prime; ++a) {
        if (auto b = exact_isqrt(prime - a * a)) return {a, *b};
    }
    throw std::logic_error("no two-square split for " + prime.get_str());
}

// Every (X, Y) with X^2 + Y^2 = p^2, built from Gaussian prime factors of p.
inline std::vector<Gaussian> representations_of_square(const BigInt& p) {
    std::vector<Gaussian> partial{{BigInt(1), BigInt(0)}};
    for (const auto& [prime, e] : factorize(abs(p))) {
        std::vector<Gaussian> choices;
        if (prime == 2) {
            choices.push_back(gpow({BigInt(0), BigInt(2)}, e));  // (1 + i)^2 = 2i
        } else if (mod4(prime) == 3) {
            choices.push_back(gpow({prime, BigInt(0)}, e));
        } else {
            Gaussian z = two_square_split(prime);
            Gaussian zbar{z.first, -z.second};
            for (unsigned long j = 0; j <= 2 * e; ++j) choices.push_back(gmul(gpow(z, j), gpow(zbar, 2 * e - j)));
        }
        std::vector<Gaussian> next;
        next.reserve(partial.size() * choices.size());
        for (const auto& a : partial)
            for (const auto& c : choices) next.push_back(gmul(a, c));
        partial = std::move(next);
    }
    std::vector<Gaussian> out;
    out.reserve(4 * partial.size());
    for (auto [x, y] : partial) {
        for (int unit = 0; unit < 4; ++unit) {
            out.emplace_back(x, y);
            Gaussian rotated{-y, x};
            x = rotated.first;
            y = rotated.second;
        }
    }
    std::sort(out.begin(), out.end(), [](const Gaussian& a, const Gaussian& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}


} // namespace detail

/**
 * Integer (l, m) with m^2 = rho * l * (2d - l).
 *
 * When sqrt(rho) = u/v is rational, the points come from X^2 + Y^2 = p^2 with
 * X = q l - p, Y = q m v / u, so any size of p is feasible. Otherwise l is
 * scanned over [0, 2d]. If a coordinate does not fit in 64 bits the count is
 * still exact but `points` is left empty and `points_complete` is false.
 */
inline LatticeCount scaled_circle_count(const Rational& d, const Rational& rho) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroParameter, "d must be nonzero");
    if (rho.sign() <= 0) throw Error(ErrorKind::NonPositiveRho, "rho must be positive, got " + rho.str());
    const BigInt p = d.num();
    const BigInt q = d.den();

    if (auto root = rational_sqrt(rho)) {
        const BigInt u = root->num();
        const BigInt v = root->den();
        std::vector<LatticePoint> pts;
        std::size_t count = 0;
        bool complete = true;
        for (const auto& [x, y] : detail::representations_of_square(p)) {
            BigInt l_num = x + p;
            if (!mpz_divisible_p(l_num.get_mpz_t(), q.get_mpz_t())) continue;
            // m = u Y / (v q)
            BigInt m_num = u * y;
            BigInt m_den = v * q;
            if (!mpz_divisible_p(m_num.get_mpz_t(), m_den.get_mpz_t())) continue;
            BigInt l = l_num / q;
            BigInt m = m_num / m_den;
            ++count;
            if (l.fits_slong_p() && m.fits_slong_p()) {
                pts.push_back({l.get_si(), m.get_si()});
            } else {
                complete = false;
            }
        }
        LatticeCount out = detail::finish(complete ? std::move(pts) : std::vector<LatticePoint>{});
        out.count = count;
        out.points_complete = complete;
        return out;
    }

    auto f = detail::to_fraction64(d);
    if (2 * std::llabs(f.p) / f.q > detail::kMaxScan) {
        throw Error(ErrorKind::InvalidArgument, "scan over l too long for d = " + d.str() + " with irrational sqrt(rho)");
    }
    const auto r = detail::to_fraction64(rho);
    std::vector<LatticePoint> pts;
    detail::scan_range(f, [&](long long l) {
        // m^2 = r l (2p - q l) / (s q)
        detail::i128 num = static_cast<detail::i128>(r.p) * l *
                           (2 * static_cast<detail::i128>(f.p) - static_cast<detail::i128>(f.q) * l);
        detail::i128 den = static_cast<detail::i128>(r.q) * f.q;
        if (num < 0 || num % den != 0) return;
        long long m = detail::exact_isqrt128(num / den);
        if (m >= 0) detail::push_pair(pts, l, m);
    });
    return detail::finish(std::move(pts));
}

namespace detail {

// Primes congruent to 1 mod 4, in order, as many as requested.
inline std::vector<BigInt> primes_one_mod_four(std::size_t how_many) {
    std::vector<BigInt> out;
    for (BigInt c = 5; out.size() < how_many; c += 4) {
        if (is_prime(c)) out.push_back(c);
    }
    return out;
}

// All ways to write u as a product of odd factors >= 3, non-increasing.
inline void odd_factorizations(const BigInt& u, const BigInt& max_factor, std::vector<BigInt>& current,
                               std::vector<std::vector<BigInt>>& out) {
    if (u == 1) {
        out.push_back(current);
        return;
    }
    for (BigInt f = std::min(u, max_factor); f >= 3; f -= 2) {
        if (mpz_even_p(f.get_mpz_t()) || !mpz_divisible_p(u.get_mpz_t(), f.get_mpz_t())) continue;
        current.push_back(f);
        odd_factorizations(u / f, f, current, out);
        current.pop_back();
    }
}

} // namespace detail

/**
 * Finds d = p/q (q in {1, 2, 3}) whose circle carries exactly n lattice points.
 * n = 4u, 2u or u with u odd selects q = 1, 2 or 3; u is written as a product
 * of factors (2 gamma_j + 1) and p = prod p_j^gamma_j over primes p_j = 1 mod 4,
 * larger gamma on smaller primes. Among all factorizations of u the smallest p
 * wins.
 */
inline Rational find_d_for_count(const BigInt& n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "target must be positive");
    if (mpz_divisible_ui_p(n.get_mpz_t(), 8)) {
        throw Error(ErrorKind::UnreachableTarget, "target divisible by 8 unreachable");
    }
    BigInt u = n;
    long q = 3;
    if (mpz_divisible_ui_p(n.get_mpz_t(), 4)) {
        u = n / 4;
        q = 1;
    } else if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) {
        u = n / 2;
        q = 2;
    }

    std::vector<std::vector<BigInt>> options;
    std::vector<BigInt> scratch;
    detail::odd_factorizations(u, u, scratch, options);

    std::size_t widest = 0;
    for (const auto& opt : options) widest = std::max(widest, opt.size());
    auto primes = detail::primes_one_mod_four(widest);

    std::optional<BigInt> best;
    for (const auto& opt : options) {
        // opt is non-increasing, so the largest gamma lands on the smallest prime
        BigInt p = 1;
        for (std::size_t j = 0; j < opt.size(); ++j) {
            BigInt power;
            unsigned long gamma = BigInt((opt[j] - 1) / 2).get_ui();
            mpz_pow_ui(power.get_mpz_t(), primes[j].get_mpz_t(), gamma);
            p *= power;
        }
        if (!best || p < *best) best = p;
    }
    return Rational(*best, BigInt(q));
}

} // namespace kt_hodge
