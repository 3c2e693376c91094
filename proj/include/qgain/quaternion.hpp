#ifndef QGAIN_QUATERNION_HPP
#define QGAIN_QUATERNION_HPP

#include <array>
#include <ostream>
#include <string>

#include "qgain/rational.hpp"

namespace qgain {

/// Quaternion over exact rational components: w + x*i + y*j + z*k with
/// i^2 = j^2 = k^2 = -1 and ij = -ji = k, jk = -kj = i, ki = -ik = j.
/// Multiplication is not commutative. All arithmetic is exact.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion() = default;
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Quaternion(int scalar) : w(scalar) {}
    Quaternion(Rational scalar) : w(std::move(scalar)) {}

    static Quaternion zero() { return Quaternion(); }
    static Quaternion one() { return Quaternion(1); }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    bool is_zero() const {
        return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero();
    }
    bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator-(const Quaternion& a) {
        return {-a.w, -a.x, -a.y, -a.z};
    }

    /// Hamilton product.
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend Quaternion operator*(const Rational& s, const Quaternion& q) {
        return {s * q.w, s * q.x, s * q.y, s * q.z};
    }
    friend Quaternion operator*(const Quaternion& q, const Rational& s) {
        return s * q;
    }

    Quaternion& operator+=(const Quaternion& b) { *this = *this + b; return *this; }
    Quaternion& operator-=(const Quaternion& b) { *this = *this - b; return *this; }
    Quaternion& operator*=(const Quaternion& b) { *this = *this * b; return *this; }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) {
        return !(a == b);
    }

    /// Components as rational strings in order (w, x, y, z).
    std::array<std::string, 4> to_strings() const {
        return {w.str(), x.str(), y.str(), z.str()};
    }
    static Quaternion from_strings(const std::array<std::string, 4>& s) {
        return {Rational::from_string(s[0]), Rational::from_string(s[1]),
                Rational::from_string(s[2]), Rational::from_string(s[3])};
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
    }
};

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline Rational re(const Quaternion& q) { return q.w; }

inline Quaternion im(const Quaternion& q) { return {0, q.x, q.y, q.z}; }

/// |q|^2 = w^2 + x^2 + y^2 + z^2, kept squared to stay rational.
inline Rational norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline bool is_unit(const Quaternion& q) { return norm_sq(q) == Rational(1); }

/// q^{-1} = conj(q) / |q|^2.
inline Quaternion inv(const Quaternion& q) {
    const Rational n = norm_sq(q);
    if (n.is_zero()) throw zero_divisor_error("inverse of zero quaternion");
    const Rational s = Rational(1) / n;
    return s * conj(q);
}

/// Exact unit quaternion from any nonzero seed: p^2 / |p|^2. The squared-seed
/// form keeps |result|^2 = 1 without square roots, and the image is dense in
/// the rational unit quaternions.
inline Quaternion unit_from_seed(const Quaternion& p) {
    const Rational n = norm_sq(p);
    if (n.is_zero()) throw zero_divisor_error("unit quaternion from zero seed");
    return (Rational(1) / n) * (p * p);
}

inline std::string to_string(const Quaternion& q) {
    return "(" + q.w.str() + ", " + q.x.str() + ", " + q.y.str() + ", " + q.z.str() + ")";
}

} // namespace qgain

#endif
