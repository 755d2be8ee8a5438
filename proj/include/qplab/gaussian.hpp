#pragma once

#include <string>

#include "qplab/rational.hpp"

namespace qplab {

// Element of Q(i): re + im*i with exact rational parts, i^2 = -1.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
        const Rational n = norm();
        return {re / n, -im / n};
    }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
    friend std::strong_ordering operator<=>(const GaussianRational&, const GaussianRational&) = default;

    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string s = re.is_zero() ? "" : re.str();
        if (!s.empty() && im.sign() > 0) s += "+";
        s += im.str() + "*i";
        return s;
    }
};

}  // namespace qplab
