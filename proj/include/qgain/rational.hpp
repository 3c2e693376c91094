#ifndef QGAIN_RATIONAL_HPP
#define QGAIN_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "qgain/errors.hpp"

namespace qgain {

/// Exact rational scalar backed by GMP. Always held in lowest terms with a
/// positive denominator; zero is canonically 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}

    Rational(long num, long den) : v_(num, den) { canonicalize_checked(); }

    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        canonicalize_checked();
    }

    explicit Rational(mpq_class q) : v_(std::move(q)) { canonicalize_checked(); }

    /// Parses "p/q" or the integer shorthand "p".
    static Rational from_string(std::string_view s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(mpz_class(std::string(s)), mpz_class(1));
            }
            mpz_class num(std::string(s.substr(0, slash)));
            mpz_class den(std::string(s.substr(slash + 1)));
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            throw parse_error("invalid rational literal: '" + std::string(s) + "'");
        }
    }

    /// "p" when the value is an integer, "p/q" otherwise.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    /// Smallest integer >= value, as a machine long (desk-scale bounds only).
    long ceil_long() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q.get_si();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return wrap(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return wrap(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return wrap(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw zero_divisor_error("rational division by zero");
        return wrap(mpq_class(a.v_ / b.v_));
    }
    friend Rational operator-(const Rational& a) { return wrap(mpq_class(-a.v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    // GMP's mpq arithmetic preserves canonical form for canonical inputs, so
    // only construction paths need an explicit canonicalize.
    void canonicalize_checked() {
        if (v_.get_den() == 0) throw zero_divisor_error("rational with zero denominator");
        v_.canonicalize();
    }

    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace qgain

#endif
