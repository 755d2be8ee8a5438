#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "qplab/errors.hpp"

namespace qplab {

using BigInt = mpz_class;

// Arbitrary-precision rational number backed by GMP. Values are kept in
// lowest terms with a positive denominator at all times; every operation
// returns a canonical value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    // Accepts "n" or "n/d" with an optional leading sign on either part.
    static Rational parse(const std::string& text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational inverse() const;    // throws DivisionByZero on zero
    Rational pow(long e) const;  // negative exponent inverts first

    double to_double() const { return v_.get_d(); }

    // log max(|num|, den): the logarithmic naive height of the value.
    double log_height() const;

    // "num/den" in lowest terms, or just "num" for integers.
    std::string str() const { return v_.get_str(); }

    // Decimal rendering with the given number of significant digits.
    std::string decimal(int significant_digits) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(const mpq_class& v) : v_(v) {}

    mpq_class v_;
};

// gcd(|a.num|, |b.num|) / lcm(a.den, b.den); the natural gcd on rationals.
// Both arguments nonzero; result is positive.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace qplab
