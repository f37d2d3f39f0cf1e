#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace netrate {

/// Exact rational number backed by GMP. Always stored in canonical
/// reduced form with a positive denominator, so equality is structural.
///
/// All ratings, bribes, utilities and revenues in this library are
/// Rationals; no floating point enters any comparison.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long numerator) : v_(numerator) {} // NOLINT: implicit by design
    Rational(long numerator, long denominator);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    /// Accepts "p/q", a finite decimal ("0.25", "-1.5"), or an integer.
    /// Decimals convert exactly (no binary rounding). Throws ParseError.
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    /// Canonical "p/q" rendering, denominator always present ("3/2", "0/1").
    std::string str() const;
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    /// Denominator as a machine integer; throws if it does not fit.
    long denominator_long() const;
    long numerator_long() const;

    /// Largest integer k with k <= (*this) * scale. Requires scale >= 1.
    long floor_scaled(long scale) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

} // namespace netrate
