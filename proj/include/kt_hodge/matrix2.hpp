#pragma once

#include <array>
#include <ostream>
#include <utility>

namespace kt_hodge {

/// Row-major 2x2 matrix over any ring-like scalar.
template <typename T>
struct Matrix2 {
    std::array<T, 4> e{};

    Matrix2() = default;
    Matrix2(T a, T b, T c, T d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }
    static Matrix2 diagonal(T a, T d) { return {std::move(a), T(0), T(0), std::move(d)}; }

    T& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const T& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    T trace() const { return e[0] + e[3]; }
    T det() const { return e[0] * e[3] - e[1] * e[2]; }

    template <typename F>
    auto map(F&& f) const -> Matrix2<decltype(f(e[0]))> {
        return {f(e[0]), f(e[1]), f(e[2]), f(e[3])};
    }

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
        return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
    }
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
        return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]};
    }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
    }
    friend Matrix2 operator*(const T& s, const Matrix2& a) {
        return {s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]};
    }
    friend bool operator==(const Matrix2& a, const Matrix2& b) { return a.e == b.e; }

    friend std::ostream& operator<<(std::ostream& os, const Matrix2& m) {
        return os << "[[" << m.e[0] << ", " << m.e[1] << "], [" << m.e[2] << ", " << m.e[3] << "]]";
    }
};

template <typename T>
struct Vector2 {
    T x{};
    T y{};
};

template <typename T>
Vector2<T> operator*(const Matrix2<T>& m, const Vector2<T>& v) {
    return {m.e[0] * v.x + m.e[1] * v.y, m.e[2] * v.x + m.e[3] * v.y};
}

/// Converts element-wise, e.g. Matrix2<Rational> into Matrix2<PiElement>.
template <typename To, typename From>
Matrix2<To> matrix_cast(const Matrix2<From>& m) {
    return {To(m.e[0]), To(m.e[1]), To(m.e[2]), To(m.e[3])};
}

} // namespace kt_hodge
