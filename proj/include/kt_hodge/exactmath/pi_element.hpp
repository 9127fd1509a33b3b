#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "kt_hodge/exactmath/rational.hpp"

namespace kt_hodge {

/**
 * Finite Laurent polynomial in pi with Gaussian-rational coefficients,
 * sum_j c_j pi^j. Pi is treated as a formal transcendental: two elements are
 * equal only when their coefficient maps are equal. No zero coefficients are
 * ever stored, so the map itself is the canonical form.
 */
class PiElement {
public:
    using Terms = std::map<long, GaussianRational>;

    PiElement() = default;
    PiElement(GaussianRational c) { set(0, std::move(c)); }
    PiElement(Rational c) { set(0, GaussianRational(std::move(c))); }
    PiElement(long c) : PiElement(Rational(c)) {}
    PiElement(int c) : PiElement(Rational(c)) {}

    /// c * pi^exponent
    static PiElement monomial(GaussianRational c, long exponent) {
        PiElement e;
        e.set(exponent, std::move(c));
        return e;
    }
    static PiElement pi() { return monomial(GaussianRational(1), 1); }
    static PiElement i() { return PiElement(GaussianRational::i()); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    GaussianRational coeff(long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    /// Single term c * pi^j, if that is the whole element.
    std::optional<std::pair<long, GaussianRational>> as_monomial() const {
        if (terms_.size() != 1) return std::nullopt;
        return *terms_.begin();
    }

    PiElement conj() const {
        PiElement r;
        for (const auto& [j, c] : terms_) r.terms_.emplace(j, c.conj());
        return r;
    }

    /// Scales by pi^shift.
    PiElement shifted(long shift) const {
        PiElement r;
        for (const auto& [j, c] : terms_) r.terms_.emplace(j + shift, c);
        return r;
    }

    PiElement operator-() const {
        PiElement r;
        for (const auto& [j, c] : terms_) r.terms_.emplace(j, -c);
        return r;
    }

    PiElement& operator+=(const PiElement& o) {
        for (const auto& [j, c] : o.terms_) accumulate(j, c);
        return *this;
    }
    PiElement& operator-=(const PiElement& o) {
        for (const auto& [j, c] : o.terms_) accumulate(j, -c);
        return *this;
    }
    PiElement& operator*=(const PiElement& o) {
        PiElement r;
        for (const auto& [j1, c1] : terms_) {
            for (const auto& [j2, c2] : o.terms_) r.accumulate(j1 + j2, c1 * c2);
        }
        *this = std::move(r);
        return *this;
    }

    /// Division is only defined by monomials (the ring has no other units).
    PiElement& operator/=(const PiElement& o) {
        auto m = o.as_monomial();
        if (!m) throw Error(ErrorKind::InvalidArgument, "PiElement division by a non-monomial");
        PiElement inv = monomial(m->second.inverse(), -m->first);
        return *this *= inv;
    }

    friend PiElement operator+(PiElement a, const PiElement& b) { return a += b; }
    friend PiElement operator-(PiElement a, const PiElement& b) { return a -= b; }
    friend PiElement operator*(PiElement a, const PiElement& b) { return a *= b; }
    friend PiElement operator/(PiElement a, const PiElement& b) { return a /= b; }
    friend bool operator==(const PiElement& a, const PiElement& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += it->second.str();
            if (it->first == 1) {
                out += "*pi";
            } else if (it->first != 0) {
                out += "*pi^" + std::to_string(it->first);
            }
        }
        return out;
    }

    /// Floating rendering for diagnostics only; never used in decisions.
    std::pair<double, double> approx() const {
        constexpr double kPi = 3.14159265358979323846;
        double re = 0.0;
        double im = 0.0;
        for (const auto& [j, c] : terms_) {
            double scale = std::pow(kPi, static_cast<double>(j));
            re += c.re().to_double() * scale;
            im += c.im().to_double() * scale;
        }
        return {re, im};
    }

private:
    void set(long j, GaussianRational c) {
        if (!c.is_zero()) terms_[j] = std::move(c);
    }

    void accumulate(long j, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(j, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const PiElement& x) { return os << x.str(); }

enum class RingOp { Add, Mul };

inline PiElement pi_ring(const PiElement& a, const PiElement& b, RingOp op) {
    return op == RingOp::Add ? a + b : a * b;
}

/**
 * Decides x in scale * pi * (Z^- u {0}). Returns the integer z with
 * x = scale * z * pi when it exists; the zero element yields z = 0.
 */
inline std::optional<BigInt> membership_in_pi_negative_integers(const PiElement& x, const Rational& scale) {
    if (scale.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "membership scale must be positive");
    if (x.is_zero()) return BigInt(0);
    auto m = x.as_monomial();
    if (!m || m->first != 1 || !m->second.is_real()) return std::nullopt;
    Rational z = m->second.re() / scale;
    if (!z.is_integer() || z.sign() > 0) return std::nullopt;
    return z.num();
}

} // namespace kt_hodge
