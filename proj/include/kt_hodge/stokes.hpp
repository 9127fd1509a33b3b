#pragma once

#include <cmath>
#include <algorithm>
#include <complex>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kt_hodge/errors.hpp"
#include "kt_hodge/exactmath/number_theory.hpp"
#include "kt_hodge/exactmath/pi_element.hpp"
#include "kt_hodge/matrix2.hpp"

// L^2-solvability of v' = (A x + B) v on the real line, for 2x2 A with real
// eigenvalues lambda1 > 0 > lambda2. Conjugating A to diag(lambda1, lambda2)
// by T and writing T B T^-1 = [[b1, b2], [b3, b4]], everything hinges on the
// ratio b2 b3 / (lambda1 - lambda2):
//   ratio in Z^-          one solution, Schwartz at both ends
//   ratio = 0, b2 = 0     one solution (the second component decouples)
//   ratio = 0, b3 = 0     none: the forced first component cannot decay twice
//   anything else         none
// Two independent routes are provided: an algebraic criterion (exact over
// PiElement, or floating) and a renormalized double-sided shooting integrator.

namespace kt_hodge {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

template <typename Scalar>
struct EigenSplit {
    Matrix2<Scalar> t;      // T with T A T^-1 = diag(lambda1, lambda2)
    Matrix2<Scalar> t_inv;  // columns are eigenvectors, largest entry scaled to 1
    Scalar lambda1{};
    Scalar lambda2{};
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline Rational magnitude(const Rational& v) { return abs(v); }

template <typename Scalar>
Vector2<Scalar> eigenvector(const Matrix2<Scalar>& a, const Scalar& lambda) {
    // Two candidate null vectors of A - lambda I; keep the better-conditioned one.
    Vector2<Scalar> u{a(0, 1), lambda - a(0, 0)};
    Vector2<Scalar> w{lambda - a(1, 1), a(1, 0)};
    auto size = [](const Vector2<Scalar>& v) {
        auto x = magnitude(v.x);
        auto y = magnitude(v.y);
        return x > y ? x : y;
    };
    Vector2<Scalar> v = size(u) >= size(w) ? u : w;
    Scalar pivot = magnitude(v.x) >= magnitude(v.y) ? v.x : v.y;
    return {v.x / pivot, v.y / pivot};
}

template <typename Scalar>
EigenSplit<Scalar> assemble_split(const Matrix2<Scalar>& a, Scalar l1, Scalar l2) {
    auto v1 = eigenvector(a, l1);
    auto v2 = eigenvector(a, l2);
    Matrix2<Scalar> p{v1.x, v2.x, v1.y, v2.y};
    Scalar det = p.det();
    Matrix2<Scalar> inv{p(1, 1) / det, -p(0, 1) / det, -p(1, 0) / det, p(0, 0) / det};
    return {inv, p, std::move(l1), std::move(l2)};
}

} // namespace detail

/// Floating eigensplit. Rejects coincident, complex, or same-sign spectra.
inline EigenSplit<double> eigensplit(const Matrix2<double>& a) {
    double tr = a.trace();
    double disc = tr * tr - 4.0 * a.det();
    double scale = std::max({std::abs(a.e[0]), std::abs(a.e[1]), std::abs(a.e[2]), std::abs(a.e[3]), 1e-300});
    if (!(disc > 1e-24 * scale * scale)) {
        throw Error(ErrorKind::DegenerateSpectrum, "eigenvalues of A are complex or coincide");
    }
    double root = std::sqrt(disc);
    double l1 = 0.5 * (tr + root);
    double l2 = 0.5 * (tr - root);
    if (!(l1 > 0.0 && l2 < 0.0)) {
        throw Error(ErrorKind::DegenerateSpectrum, "eigenvalues of A do not straddle zero");
    }
    return detail::assemble_split(a, l1, l2);
}

/// Exact eigensplit of a rational matrix; eigenvalues must be rational.
inline EigenSplit<Rational> eigensplit(const Matrix2<Rational>& a) {
    Rational tr = a.trace();
    Rational disc = tr * tr - Rational(4) * a.det();
    if (disc.sign() <= 0) {
        throw Error(ErrorKind::DegenerateSpectrum, "eigenvalues of A are complex or coincide");
    }
    auto root = rational_sqrt(disc);
    if (!root) throw Error(ErrorKind::IrrationalScale, "eigenvalues of A are irrational (discriminant " + disc.str() + ")");
    Rational l1 = (tr + *root) / Rational(2);
    Rational l2 = (tr - *root) / Rational(2);
    if (!(l1.sign() > 0 && l2.sign() < 0)) {
        throw Error(ErrorKind::DegenerateSpectrum, "eigenvalues of A do not straddle zero");
    }
    return detail::assemble_split(a, l1, l2);
}

/// v' = (A x + B) v with floating coefficients.
class StokesProblem {
public:
    StokesProblem(Matrix2<double> a, Matrix2<Complex> b) : a_(a), b_(b), split_(eigensplit(a_)) {}

    const Matrix2<double>& a() const noexcept { return a_; }
    const Matrix2<Complex>& b() const noexcept { return b_; }
    const EigenSplit<double>& split() const noexcept { return split_; }
    double gap() const noexcept { return split_.lambda1 - split_.lambda2; }

private:
    Matrix2<double> a_;
    Matrix2<Complex> b_;
    EigenSplit<double> split_;
};

/**
 * Exact problem: A = pi^pi_power * shape with a rational shape matrix, and B
 * with PiElement entries. Covers every A this library builds (multiples of pi
 * times rational matrices with rational spectrum).
 */
class ExactStokesProblem {
public:
    ExactStokesProblem(Matrix2<Rational> shape, long pi_power, Matrix2<PiElement> b)
        : shape_(std::move(shape)), pi_power_(pi_power), b_(std::move(b)), split_(eigensplit(shape_)) {}

    const Matrix2<Rational>& shape() const noexcept { return shape_; }
    long pi_power() const noexcept { return pi_power_; }
    const Matrix2<PiElement>& b() const noexcept { return b_; }
    const EigenSplit<Rational>& split() const noexcept { return split_; }

    Matrix2<PiElement> a() const {
        return shape_.map([&](const Rational& r) { return PiElement::monomial(GaussianRational(r), pi_power_); });
    }

    /// lambda1 - lambda2 as an exact element.
    PiElement gap() const {
        return PiElement::monomial(GaussianRational(split_.lambda1 - split_.lambda2), pi_power_);
    }

    StokesProblem to_float() const {
        double s = std::pow(kPi, static_cast<double>(pi_power_));
        auto a = shape_.map([&](const Rational& r) { return r.to_double() * s; });
        auto b = b_.map([](const PiElement& x) {
            auto [re, im] = x.approx();
            return Complex(re, im);
        });
        return StokesProblem(a, b);
    }

private:
    Matrix2<Rational> shape_;
    long pi_power_;
    Matrix2<PiElement> b_;
    EigenSplit<Rational> split_;
};

enum class RatioClass {
    NegativeInteger,
    ZeroUpperCoupling,  // b2 = 0: solvable
    ZeroLowerCoupling,  // b3 = 0, b2 != 0: not solvable
    PositiveInteger,
    NonInteger,
};

inline std::string_view to_string(RatioClass c) noexcept {
    switch (c) {
    case RatioClass::NegativeInteger: return "negative_integer";
    case RatioClass::ZeroUpperCoupling: return "zero_upper_coupling";
    case RatioClass::ZeroLowerCoupling: return "zero_lower_coupling";
    case RatioClass::PositiveInteger: return "positive_integer";
    case RatioClass::NonInteger: return "non_integer";
    }
    return "unknown";
}

struct ProfileSample {
    double x = 0.0;
    double log_norm = 0.0;  // log |v(x)| - log |v(0)| along the shot solution
};

struct StokesVerdict {
    bool solvable = false;
    RatioClass kind = RatioClass::NonInteger;
    Complex ratio;                      // floating value, always filled
    std::optional<PiElement> exact_ratio;
    std::optional<BigInt> integer;      // z when the ratio is an integer
    bool borderline = false;            // floating ratio within 1e-6 but not 1e-9 of an integer
    std::optional<double> angle;        // numeric route: sine of the angle between shot lines
    std::vector<ProfileSample> profile; // numeric route only

    bool zero_ratio() const {
        return kind == RatioClass::ZeroUpperCoupling || kind == RatioClass::ZeroLowerCoupling;
    }
};

inline bool solvable_class(RatioClass c) {
    return c == RatioClass::NegativeInteger || c == RatioClass::ZeroUpperCoupling;
}

/// Conjugated B for an exact problem.
inline Matrix2<PiElement> conjugated_b(const ExactStokesProblem& problem) {
    auto t = matrix_cast<PiElement>(problem.split().t);
    auto t_inv = matrix_cast<PiElement>(problem.split().t_inv);
    return t * problem.b() * t_inv;
}

inline Matrix2<Complex> conjugated_b(const StokesProblem& problem) {
    auto to_c = [](double v) { return Complex(v, 0.0); };
    return problem.split().t.map(to_c) * problem.b() * problem.split().t_inv.map(to_c);
}

/// Exact ratio b2 b3 / (lambda1 - lambda2).
inline PiElement stokes_ratio(const ExactStokesProblem& problem) {
    auto tb = conjugated_b(problem);
    return tb(0, 1) * tb(1, 0) / problem.gap();
}

inline Complex stokes_ratio(const StokesProblem& problem) {
    auto tb = conjugated_b(problem);
    return tb(0, 1) * tb(1, 0) / problem.gap();
}

inline StokesVerdict stokes_criterion(const ExactStokesProblem& problem) {
    auto tb = conjugated_b(problem);
    PiElement ratio = tb(0, 1) * tb(1, 0) / problem.gap();

    StokesVerdict v;
    v.exact_ratio = ratio;
    auto [re, im] = ratio.approx();
    v.ratio = Complex(re, im);

    // ratio in Z^- u {0}  <=>  ratio * pi in 1 * pi * (Z^- u {0})
    if (auto z = membership_in_pi_negative_integers(ratio.shifted(1), Rational(1))) {
        v.integer = *z;
        if (*z < 0) {
            v.kind = RatioClass::NegativeInteger;
        } else {
            v.kind = tb(0, 1).is_zero() ? RatioClass::ZeroUpperCoupling : RatioClass::ZeroLowerCoupling;
        }
    } else if (auto neg = membership_in_pi_negative_integers((-ratio).shifted(1), Rational(1))) {
        v.integer = -*neg;
        v.kind = RatioClass::PositiveInteger;
    } else {
        v.kind = RatioClass::NonInteger;
    }
    v.solvable = solvable_class(v.kind);
    return v;
}

inline StokesVerdict stokes_criterion(const StokesProblem& problem) {
    constexpr double kIntegerTol = 1e-9;
    constexpr double kResonanceTol = 1e-6;

    auto tb = conjugated_b(problem);
    Complex ratio = tb(0, 1) * tb(1, 0) / problem.gap();

    StokesVerdict v;
    v.ratio = ratio;
    double nearest = std::round(ratio.real());
    double dist = std::abs(ratio - Complex(nearest, 0.0));
    if (dist <= kIntegerTol) {
        v.integer = BigInt(static_cast<long>(nearest));
        if (nearest < 0) {
            v.kind = RatioClass::NegativeInteger;
        } else if (nearest > 0) {
            v.kind = RatioClass::PositiveInteger;
        } else {
            double scale = std::max({std::abs(tb(0, 0)), std::abs(tb(0, 1)), std::abs(tb(1, 0)), std::abs(tb(1, 1)), 1.0});
            v.kind = std::abs(tb(0, 1)) <= 1e-12 * scale ? RatioClass::ZeroUpperCoupling : RatioClass::ZeroLowerCoupling;
        }
    } else {
        v.kind = RatioClass::NonInteger;
        v.borderline = dist <= kResonanceTol;
    }
    v.solvable = solvable_class(v.kind);
    return v;
}

struct ShootingOptions {
    std::optional<double> x_max;  // default: smallest X with (lambda1 - lambda2) X^2 / 2 >= 60
    long steps = 200000;
    double tol = 1e-6;
    long profile_every = 1000;
};

namespace detail {

using CVec = Vector2<Complex>;

inline double norm(const CVec& v) { return std::sqrt(std::norm(v.x) + std::norm(v.y)); }

inline bool finite(const CVec& v) {
    return std::isfinite(v.x.real()) && std::isfinite(v.x.imag()) && std::isfinite(v.y.real()) &&
           std::isfinite(v.y.imag());
}

struct Shot {
    CVec at_zero;
    std::vector<ProfileSample> profile;  // relative to the value at 0
};

// Classical RK4 from x0 to 0 in `steps` equal steps, renormalizing every step.
inline Shot shoot_to_zero(const Matrix2<double>& a, const Matrix2<Complex>& b, double x0, CVec start, long steps,
                          long profile_every) {
    auto rhs = [&](double x, const CVec& v) {
        Matrix2<Complex> m{a(0, 0) * x + b(0, 0), a(0, 1) * x + b(0, 1), a(1, 0) * x + b(1, 0),
                           a(1, 1) * x + b(1, 1)};
        return m * v;
    };
    auto axpy = [](const CVec& v, Complex s, const CVec& k) { return CVec{v.x + s * k.x, v.y + s * k.y}; };

    const double h = -x0 / static_cast<double>(steps);
    CVec v = start;
    double n0 = norm(v);
    v = {v.x / n0, v.y / n0};

    double log_growth = 0.0;  // log |v(x)| - log |v(x0)|
    std::vector<ProfileSample> raw;
    raw.push_back({x0, 0.0});
    for (long i = 0; i < steps; ++i) {
        double x = x0 + h * static_cast<double>(i);
        CVec k1 = rhs(x, v);
        CVec k2 = rhs(x + 0.5 * h, axpy(v, 0.5 * h, k1));
        CVec k3 = rhs(x + 0.5 * h, axpy(v, 0.5 * h, k2));
        CVec k4 = rhs(x + h, axpy(v, h, k3));
        CVec next{v.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
                  v.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};
        double n = norm(next);
        if (!finite(next) || !(n > 0.0) || !std::isfinite(n)) {
            throw Error(ErrorKind::NonFinite, "shooting produced non-finite values at x = " + std::to_string(x));
        }
        log_growth += std::log(n);
        v = {next.x / n, next.y / n};
        if ((i + 1) % profile_every == 0 || i + 1 == steps) {
            raw.push_back({x0 + h * static_cast<double>(i + 1), log_growth});
        }
    }
    for (auto& s : raw) s.log_norm -= log_growth;
    return {v, std::move(raw)};
}

} // namespace detail

/**
 * Numerical L^2 test. Integrates backward from +X and forward from -X to 0;
 * each run converges in direction to the solution decaying at its end. The
 * problem is solvable when the two complex lines at 0 coincide, measured by
 * |det[v+ v-]| / (|v+| |v-|) < tol.
 */
inline StokesVerdict numeric_l2_test(const StokesProblem& problem, const ShootingOptions& opts = {}) {
    const double gap = problem.gap();
    const double x_max = opts.x_max.value_or(std::sqrt(120.0 / gap) * (1.0 + 1e-12));
    if (!(gap * x_max * x_max / 2.0 >= 60.0 * (1.0 - 1e-9))) {
        throw Error(ErrorKind::InvalidArgument, "X too small: need (lambda1 - lambda2) X^2 / 2 >= 60");
    }
    if (opts.steps < 10000) throw Error(ErrorKind::InvalidArgument, "steps must be at least 10^4");
    if (!(opts.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");

    // Decaying direction at either end is asymptotic to the lambda2 eigenvector.
    const auto& p = problem.split().t_inv;
    detail::CVec start{Complex(p(0, 1), 0.0), Complex(p(1, 1), 0.0)};
    long every = std::max(1L, opts.profile_every);

    auto plus = detail::shoot_to_zero(problem.a(), problem.b(), x_max, start, opts.steps, every);
    auto minus = detail::shoot_to_zero(problem.a(), problem.b(), -x_max, start, opts.steps, every);

    const auto& u = plus.at_zero;
    const auto& w = minus.at_zero;
    double angle = std::abs(u.x * w.y - u.y * w.x) / (detail::norm(u) * detail::norm(w));

    StokesVerdict v;
    v.ratio = stokes_ratio(problem);
    v.angle = angle;
    v.solvable = angle < opts.tol;
    v.kind = stokes_criterion(problem).kind;
    v.profile.reserve(plus.profile.size() + minus.profile.size());
    for (auto it = minus.profile.begin(); it != minus.profile.end(); ++it) v.profile.push_back(*it);
    for (auto it = plus.profile.rbegin(); it != plus.profile.rend(); ++it) v.profile.push_back(*it);
    return v;
}

/**
 * Builds a random problem whose ratio b2 b3 / (lambda1 - lambda2) equals the
 * requested value. A zero ratio is realized with b2 = 0 unless
 * `zero_on_lower` asks for b3 = 0 instead.
 */
inline StokesProblem random_problem_with_ratio(std::mt19937_64& rng, Complex ratio, bool zero_on_lower = false) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto in = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

    double l1 = in(0.5, 2.0);
    double l2 = -in(0.5, 2.0);
    double gap = l1 - l2;

    Matrix2<double> p;
    do {
        p = {in(-1.0, 1.0), in(-1.0, 1.0), in(-1.0, 1.0), in(-1.0, 1.0)};
    } while (std::abs(p.det()) < 0.3);
    Matrix2<double> p_inv{p(1, 1) / p.det(), -p(0, 1) / p.det(), -p(1, 0) / p.det(), p(0, 0) / p.det()};
    Matrix2<double> a = p * Matrix2<double>::diagonal(l1, l2) * p_inv;

    auto phase = [&] { return std::polar(1.0, in(0.0, 2.0 * kPi)); };
    Complex b1(in(-0.5, 0.5), in(-0.5, 0.5));
    Complex b4(in(-0.5, 0.5), in(-0.5, 0.5));
    Complex b2;
    Complex b3;
    if (std::abs(ratio) == 0.0) {
        Complex other = in(0.5, 1.5) * phase();
        (zero_on_lower ? b2 : b3) = other;
    } else {
        double size = std::sqrt(std::abs(ratio) * gap) * in(0.7, 1.4);
        b2 = size * phase();
        b3 = ratio * gap / b2;
    }
    auto to_c = [](double v) { return Complex(v, 0.0); };
    Matrix2<Complex> b = p.map(to_c) * Matrix2<Complex>{b1, b2, b3, b4} * p_inv.map(to_c);
    return StokesProblem(a, b);
}

// ---------------------------------------------------------------------------
// Discrete analogue: (a_k, b_k) = (A k^2 + B k + C) (a_{k-1}, b_{k-1}) / (d k + e)

enum class Direction { Forward, Backward };

inline std::string_view to_string(Direction d) noexcept {
    return d == Direction::Forward ? "forward" : "backward";
}

struct SchwartzClassification {
    bool schwartz = false;
    std::optional<Direction> failing;  // first failing direction; forward is checked first
};

namespace detail {

// Envelope test on t(k) = 4 log k + log |v_k| for k = 1..K: the block maxima over
// the second half of the window must strictly decrease.
inline bool decays_rapidly(const std::vector<double>& log_mag) {
    const std::size_t k_max = log_mag.size();
    std::vector<double> t(k_max);
    for (std::size_t k = 1; k <= k_max; ++k) t[k - 1] = 4.0 * std::log(static_cast<double>(k)) + log_mag[k - 1];
    const std::size_t begin = k_max / 2;
    const std::size_t blocks = 4;
    const std::size_t width = std::max<std::size_t>(1, (k_max - begin) / blocks);
    double previous = -std::numeric_limits<double>::infinity();
    bool first = true;
    for (std::size_t blk = 0; blk < blocks; ++blk) {
        std::size_t lo = begin + blk * width;
        std::size_t hi = blk + 1 == blocks ? k_max : std::min(k_max, lo + width);
        if (lo >= hi) break;
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t k = lo; k < hi; ++k) mx = std::max(mx, t[k]);
        if (!first && !(mx < previous) && !(std::isinf(mx) && mx < 0)) return false;
        previous = mx;
        first = false;
    }
    return true;
}

} // namespace detail

inline SchwartzClassification discrete_schwartz_classify(const Matrix2<Complex>& a, const Matrix2<Complex>& b,
                                                         const Matrix2<Complex>& c, Complex d, Complex e,
                                                         long k_range, Vector2<Complex> seed = {1.0, 1.0}) {
    if (k_range < 8) throw Error(ErrorKind::InvalidArgument, "k_range must be at least 8");
    for (long k = -k_range; k <= k_range; ++k) {
        if (d * static_cast<double>(k) + e == Complex(0.0, 0.0)) {
            throw Error(ErrorKind::SingularStep, "d k + e vanishes at k = " + std::to_string(k));
        }
    }
    auto step_matrix = [&](long k) {
        Complex kk(static_cast<double>(k), 0.0);
        Complex k2 = kk * kk;
        return Matrix2<Complex>{a(0, 0) * k2 + b(0, 0) * kk + c(0, 0), a(0, 1) * k2 + b(0, 1) * kk + c(0, 1),
                                a(1, 0) * k2 + b(1, 0) * kk + c(1, 0), a(1, 1) * k2 + b(1, 1) * kk + c(1, 1)};
    };
    auto max_norm = [](const Vector2<Complex>& v) { return std::max(std::abs(v.x), std::abs(v.y)); };

    // Runs one direction, returning log max(|a_k|, |b_k|) for |k| = 1..K.
    auto run = [&](Direction dir) {
        std::vector<double> log_mag;
        log_mag.reserve(static_cast<std::size_t>(k_range));
        Vector2<Complex> v = seed;
        double scale = 0.0;
        for (long i = 1; i <= k_range; ++i) {
            if (dir == Direction::Forward) {
                long k = i;
                Complex s = 1.0 / (d * static_cast<double>(k) + e);
                auto m = step_matrix(k);
                v = {s * (m(0, 0) * v.x + m(0, 1) * v.y), s * (m(1, 0) * v.x + m(1, 1) * v.y)};
            } else {
                long k = 1 - i;  // recovers v_{k-1} from v_k
                auto m = step_matrix(k);
                Complex det = m.det();
                double mscale = std::max({std::abs(m.e[0]), std::abs(m.e[1]), std::abs(m.e[2]), std::abs(m.e[3])});
                if (std::abs(det) <= 1e-14 * mscale * mscale) {
                    throw Error(ErrorKind::SingularStep, "recurrence matrix singular at k = " + std::to_string(k));
                }
                Complex s = (d * static_cast<double>(k) + e) / det;
                v = {s * (m(1, 1) * v.x - m(0, 1) * v.y), s * (-m(1, 0) * v.x + m(0, 0) * v.y)};
            }
            double n = max_norm(v);
            if (n == 0.0) {
                log_mag.push_back(-std::numeric_limits<double>::infinity());
                v = {0.0, 0.0};
                continue;
            }
            scale += std::log(n);
            v = {v.x / n, v.y / n};
            log_mag.push_back(scale);
        }
        return log_mag;
    };

    // Once a zero vector appears the sequence stays zero; fill the tail.
    auto sanitize = [](std::vector<double> lm) {
        bool dead = false;
        for (auto& x : lm) {
            if (std::isinf(x) && x < 0) dead = true;
            if (dead) x = -std::numeric_limits<double>::infinity();
        }
        return lm;
    };

    if (!detail::decays_rapidly(sanitize(run(Direction::Forward)))) return {false, Direction::Forward};
    if (!detail::decays_rapidly(sanitize(run(Direction::Backward)))) return {false, Direction::Backward};
    return {true, std::nullopt};
}

} // namespace kt_hodge
