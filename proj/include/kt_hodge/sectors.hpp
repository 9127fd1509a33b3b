#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kt_hodge/exactmath/number_theory.hpp"
#include "kt_hodge/exactmath/pi_element.hpp"
#include "kt_hodge/lattice.hpp"
#include "kt_hodge/stokes.hpp"

// Harmonic (0,1)-forms on the Kodaira-Thurston manifold for the almost complex
// structures J_{a,b}, split over the irreducible sectors of L^2(KT^4):
// finite orbits H^{k,l,m,0} (plain Fourier modes, a 2x2 linear system each)
// and infinite orbits H^{k,m,n}, n != 0 (a 2x2 first-order ODE each).
//
// The structure constant b is always carried as b = 8 pi d with d rational,
// so b / (4 pi) = 2d is rational and every 1/b becomes a pi^-1 term.

namespace kt_hodge {

/// Parameters of J_{a,b} with d = b / (8 pi).
struct AcsParams {
    Rational a;
    Rational d;

    AcsParams(Rational a_, Rational d_) : a(std::move(a_)), d(std::move(d_)) {
        if (d.is_zero()) throw Error(ErrorKind::ZeroParameter, "d must be nonzero (b = 8 pi d)");
    }
};

struct StandardOrthonormal {};
struct AlmostKahlerRho {
    Rational rho;
};

/// Standard orthonormal metric behaves exactly like AlmostKahlerRho{1}.
class MetricSpec {
public:
    MetricSpec() = default;
    MetricSpec(StandardOrthonormal s) : v_(s) {}
    MetricSpec(AlmostKahlerRho r) : v_(std::move(r)) {
        if (std::get<AlmostKahlerRho>(v_).rho.sign() <= 0) {
            throw Error(ErrorKind::NonPositiveRho, "rho must be positive");
        }
    }
    static MetricSpec standard() { return MetricSpec(StandardOrthonormal{}); }
    static MetricSpec rho(Rational r) { return MetricSpec(AlmostKahlerRho{std::move(r)}); }

    bool is_standard() const { return std::holds_alternative<StandardOrthonormal>(v_); }
    Rational rho_value() const { return is_standard() ? Rational(1) : std::get<AlmostKahlerRho>(v_).rho; }
    std::string name() const { return is_standard() ? "standard" : "almost_kahler_rho"; }

private:
    std::variant<StandardOrthonormal, AlmostKahlerRho> v_;
};

struct FiniteOrbit {
    long k = 0;
    long l = 0;
    long m = 0;
    friend bool operator==(const FiniteOrbit&, const FiniteOrbit&) = default;
};

struct InfiniteOrbit {
    long k = 0;
    long m = 0;  // 0 <= m < |n|
    long n = 1;
    friend bool operator==(const InfiniteOrbit&, const InfiniteOrbit&) = default;
};

using SectorId = std::variant<FiniteOrbit, InfiniteOrbit>;

inline std::string to_string(const SectorId& id) {
    if (const auto* f = std::get_if<FiniteOrbit>(&id)) {
        return "H(k=" + std::to_string(f->k) + ",l=" + std::to_string(f->l) + ",m=" + std::to_string(f->m) + ",0)";
    }
    const auto& s = std::get<InfiniteOrbit>(id);
    return "H(k=" + std::to_string(s.k) + ",m=" + std::to_string(s.m) + ",n=" + std::to_string(s.n) + ")";
}

struct LatticeWitness {
    long l = 0;
    long m = 0;
};
struct ConstantSolution {};
struct StokesRatio {
    PiElement ratio;
    std::string note;
};
struct Empty {
    std::string reason;
};

using Certificate = std::variant<LatticeWitness, ConstantSolution, StokesRatio, Empty>;

struct SectorReport {
    SectorId sector;
    unsigned dimension = 0;
    Certificate certificate;
};

/// Finite orbits first (k, l, m ascending), then infinite orbits (k, n, m ascending).
inline std::vector<SectorId> enumerate_sectors(long k_max, long l_max, long m_max, long n_max) {
    if (k_max < 0 || l_max < 0 || m_max < 0 || n_max < 0) {
        throw Error(ErrorKind::InvalidArgument, "sector bounds must be non-negative");
    }
    std::vector<SectorId> out;
    for (long k = -k_max; k <= k_max; ++k)
        for (long l = -l_max; l <= l_max; ++l)
            for (long m = -m_max; m <= m_max; ++m) out.emplace_back(FiniteOrbit{k, l, m});
    for (long k = -k_max; k <= k_max; ++k)
        for (long n = -n_max; n <= n_max; ++n) {
            if (n == 0) continue;
            for (long m = 0; m < std::labs(n); ++m) out.emplace_back(InfiniteOrbit{k, m, n});
        }
    return out;
}

namespace detail {

inline PiElement pi_term(const GaussianRational& c, long power = 1) { return PiElement::monomial(c, power); }

// B for the rho-deformed metric; rho = 1 is the standard orthonormal metric.
//   B = 2 pi [[k, (m - n (a - i) / b) / rho], [m - n (a + i) / b, i b / (4 pi) - k]]
// with b = 8 pi d, so 2 pi n (a -+ i) / b = n (a -+ i) / (4 d) carries no pi.
inline Matrix2<PiElement> sector_b(const AcsParams& p, const Rational& rho, long k, long m, long n) {
    const Rational nr(n);
    const GaussianRational coupling_minus = GaussianRational(p.a, Rational(-1)) * GaussianRational(nr / (Rational(4) * p.d));
    const GaussianRational coupling_plus = GaussianRational(p.a, Rational(1)) * GaussianRational(nr / (Rational(4) * p.d));
    const Rational inv_rho = Rational(1) / rho;

    PiElement b11 = pi_term(GaussianRational(Rational(2 * k)));
    PiElement b12 = (pi_term(GaussianRational(Rational(2 * m))) - PiElement(coupling_minus)) * PiElement(inv_rho);
    PiElement b21 = pi_term(GaussianRational(Rational(2 * m))) - PiElement(coupling_plus);
    PiElement b22 = pi_term(GaussianRational(Rational(-2 * k), Rational(4) * p.d));
    return {b11, b12, b21, b22};
}

// A = 2 pi n [[0, 1 / rho], [1, 0]] = pi * shape.
inline Matrix2<Rational> sector_a_shape(const Rational& rho, long n) {
    Rational two_n(2 * n);
    return {Rational(0), two_n / rho, two_n, Rational(0)};
}

inline const char* kRationalObstruction =
    "necessary condition 8*pi*d^2 in Z[sqrt(D)] unmet: 8*pi*d^2 is transcendental for rational d";

inline void require_nonzero_n(long n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "infinite-orbit sector needs n != 0");
}

} // namespace detail

/// Exact ODE system v' = (A x + B) v on H^{k,m,n} for the standard orthonormal metric.
inline ExactStokesProblem build_sector_ode_standard(const AcsParams& params, long k, long m, long n) {
    detail::require_nonzero_n(n);
    return ExactStokesProblem(detail::sector_a_shape(Rational(1), n), 1, detail::sector_b(params, Rational(1), k, m, n));
}

/// Exact ODE system for the rho-deformed metric; requires sqrt(rho) rational.
inline ExactStokesProblem build_sector_ode_rho(const AcsParams& params, const Rational& rho, long k, long m, long n) {
    detail::require_nonzero_n(n);
    if (rho.sign() <= 0) throw Error(ErrorKind::NonPositiveRho, "rho must be positive");
    if (!rational_sqrt(rho)) {
        throw Error(ErrorKind::IrrationalScale, "sqrt(rho) is irrational for rho = " + rho.str() + "; exact mode unavailable");
    }
    return ExactStokesProblem(detail::sector_a_shape(rho, n), 1, detail::sector_b(params, rho, k, m, n));
}

/// Floating rendering of the rho system, valid for any positive rho.
inline StokesProblem build_sector_ode_rho_float(const AcsParams& params, const Rational& rho, long k, long m, long n) {
    detail::require_nonzero_n(n);
    if (rho.sign() <= 0) throw Error(ErrorKind::NonPositiveRho, "rho must be positive");
    auto shape = detail::sector_a_shape(rho, n);
    auto a = shape.map([](const Rational& r) { return r.to_double() * kPi; });
    auto b = detail::sector_b(params, rho, k, m, n).map([](const PiElement& x) {
        auto [re, im] = x.approx();
        return Complex(re, im);
    });
    return StokesProblem(a, b);
}

namespace detail {

inline SectorReport report_from_verdict(InfiniteOrbit id, const StokesVerdict& v) {
    if (v.solvable) {
        // Unreachable for rational d: the ratio always carries pi^1 and pi^-1 terms.
        throw std::logic_error("sector " + to_string(SectorId(id)) + " solvable for rational parameters");
    }
    PiElement ratio = v.exact_ratio.value_or(PiElement());
    return {id, 0, StokesRatio{ratio, kRationalObstruction}};
}

} // namespace detail

inline SectorReport sector_criterion_standard(const AcsParams& params, long k, long m, long n) {
    auto problem = build_sector_ode_standard(params, k, m, n);
    return detail::report_from_verdict({k, m, n}, stokes_criterion(problem));
}

/// rho-metric criterion: exact when sqrt(rho) is rational, floating otherwise.
inline SectorReport sector_criterion_rho(const AcsParams& params, const Rational& rho, long k, long m, long n) {
    if (rational_sqrt(rho)) {
        return detail::report_from_verdict({k, m, n}, stokes_criterion(build_sector_ode_rho(params, rho, k, m, n)));
    }
    auto v = stokes_criterion(build_sector_ode_rho_float(params, rho, k, m, n));
    if (v.solvable) throw std::logic_error("floating rho criterion reported a solvable sector");
    return {InfiniteOrbit{k, m, n}, 0,
            StokesRatio{PiElement(), "floating evaluation only (sqrt(rho) irrational); ratio " +
                                         std::to_string(v.ratio.real()) + " + " + std::to_string(v.ratio.imag()) + "i"}};
}

/**
 * Dimension of harmonic (0,1)-forms in H^{k,l,m,0}. The coefficients (f, g)
 * solve
 *   -m f + (k + i l - 2 d i) g = 0
 *   rho (k - i l) f + m g      = 0
 * and the dimension is 2 - rank of that exact Gaussian-rational system.
 */
inline SectorReport finite_sector_dimension(const AcsParams& params, const MetricSpec& metric, long k, long l, long m) {
    const Rational rho = metric.rho_value();
    const Rational two_d = params.d + params.d;
    GaussianRational m11{Rational(-m)};
    GaussianRational m12(Rational(k), Rational(l) - two_d);
    GaussianRational m21 = GaussianRational(rho) * GaussianRational(Rational(k), Rational(-l));
    GaussianRational m22{Rational(m)};

    FiniteOrbit id{k, l, m};
    const bool all_zero = m11.is_zero() && m12.is_zero() && m21.is_zero() && m22.is_zero();
    const GaussianRational det = m11 * m22 - m12 * m21;
    if (all_zero) {
        // needs m = 0, k = 0 and l = 0 = 2d at once, impossible for d != 0
        throw std::logic_error("finite sector system vanished identically");
    }
    if (!det.is_zero()) {
        return {id, 0, Empty{"coefficient system is nonsingular"}};
    }
    if (k == 0 && l == 0 && m == 0) return {id, 1, ConstantSolution{}};
    return {id, 1, LatticeWitness{l, m}};
}

/// h^{2,0} = 1 iff b in 4 pi Z, i.e. 2d in Z.
inline unsigned h20(const AcsParams& params) { return (params.d + params.d).is_integer() ? 1U : 0U; }

/**
 * Fourier modes (k, l) in the window with b/4 + pi (i k - l) = 0, evaluated
 * exactly as 2 pi d + pi (i k - l) in the pi-ring.
 */
inline std::vector<std::pair<long, long>> fourier_h20_scan(const AcsParams& params, long window) {
    if (window < 1) throw Error(ErrorKind::InvalidArgument, "window must be positive");
    std::vector<std::pair<long, long>> modes;
    const PiElement b_quarter = PiElement::monomial(GaussianRational(Rational(2) * params.d), 1);
    for (long k = -window; k <= window; ++k) {
        for (long l = -window; l <= window; ++l) {
            PiElement symbol = b_quarter + PiElement::monomial(GaussianRational(Rational(-l), Rational(k)), 1);
            if (symbol.is_zero()) modes.emplace_back(k, l);
        }
    }
    return modes;
}

/// h^{1,0} for the J_{a,b} family; a known constant, not derived here.
inline unsigned h10(const AcsParams&) { return 1U; }

struct SweepWindow {
    long k_max = 3;
    long m_max = 3;
    long n_max = 3;
};

struct H01Report {
    std::size_t count = 0;
    LatticeCount lattice;
    std::size_t swept_sectors = 0;  // n != 0 sectors checked, all contributing 0
};

/**
 * h^{0,1} under the given metric: the lattice count on m^2 = rho l (2d - l),
 * plus the n != 0 contributions over the window (which are zero for rational
 * parameters; a nonzero contribution raises std::logic_error).
 */
inline H01Report h01_report(const AcsParams& params, const MetricSpec& metric, const SweepWindow& window = {}) {
    const Rational rho = metric.rho_value();
    H01Report out;
    out.lattice = scaled_circle_count(params.d, rho);
    out.count = out.lattice.count;
    for (long k = -window.k_max; k <= window.k_max; ++k) {
        for (long n = -window.n_max; n <= window.n_max; ++n) {
            if (n == 0) continue;
            for (long m = 0; m < std::labs(n) && m <= window.m_max; ++m) {
                auto rep = metric.is_standard() ? sector_criterion_standard(params, k, m, n)
                                                : sector_criterion_rho(params, rho, k, m, n);
                out.count += rep.dimension;
                ++out.swept_sectors;
            }
        }
    }
    return out;
}

inline std::size_t h01(const AcsParams& params, const MetricSpec& metric, const SweepWindow& window = {}) {
    return h01_report(params, metric, window).count;
}

} // namespace kt_hodge
