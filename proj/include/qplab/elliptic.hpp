#pragma once

#include <string>

#include "qplab/rational.hpp"

namespace qplab::elliptic {

// Elliptic curve over Q in short Weierstrass form y^2 = x^3 + p x + q.
class Curve {
public:
    Curve(Rational p, Rational q);  // throws SingularCurve when the discriminant vanishes

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }

    Rational discriminant() const;  // -16(4p^3 + 27q^2)
    Rational j_invariant() const;   // 1728 * 4p^3 / (4p^3 + 27q^2)

    friend bool operator==(const Curve&, const Curve&) = default;

private:
    Rational p_, q_;
};

// Affine point or the point at infinity.
class Point {
public:
    Point() : inf_(true) {}
    Point(Rational x, Rational y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    static Point infinity() { return Point(); }

    bool is_infinity() const { return inf_; }
    const Rational& x() const;
    const Rational& y() const;

    friend bool operator==(const Point&, const Point&) = default;

    std::string str() const;

private:
    bool inf_;
    Rational x_, y_;
};

// Exact membership test; the point at infinity is always on the curve.
bool on_curve(const Curve& e, const Point& pt);

Point neg(const Curve& e, const Point& pt);
Point add(const Curve& e, const Point& a, const Point& b);
Point mul(const Curve& e, long n, const Point& pt);

// x-coordinate of [2](x, *): (x^4 - 2px^2 - 8qx + p^2) / (4(x^3 + px + q)).
// Throws TwoTorsionAbscissa when x is the abscissa of a 2-torsion point.
Rational x_double(const Curve& e, const Rational& x);

// log max(|num|, den) of the x-coordinate; 0 at infinity.
double naive_x_height(const Point& pt);

struct TorsionResult {
    bool is_torsion = false;
    int order = 0;  // 0 when not torsion
};

// Exact torsion test by computing [n]P for n = 1..12. That this suffices for
// rational points relies on the uniform bound for torsion orders of elliptic
// curves over Q (Mazur); see README.
TorsionResult is_torsion(const Curve& e, const Point& pt);

struct HeightOptions {
    int max_iters = 12;
    double tolerance = 1e-6;
};

struct HeightEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    int iterations = 0;
    Rational normalization = Rational(1);

    friend bool operator==(const HeightEstimate&, const HeightEstimate&) = default;
};

// Global normalization applied to the raw doubling limit
// L = lim 4^{-n} h(x([2^n]P)). Calibrated once against the reference point
// (-4/3, 4) on y^2 = x^3 + 32/3 x + 880/27, whose canonical height is
// 0.216095198667748: the raw limit itself matches, so the factor is 1.
const Rational& height_normalization();

// Canonical (Neron-Tate) height via the doubling limit with exact rational
// iterates. Torsion points return exactly 0. Iteration stops when successive
// scaled estimates differ by less than tolerance/3 or max_iters is reached;
// the error bound is derived from the last observed increment.
HeightEstimate canonical_height(const Curve& e, const Point& pt, const HeightOptions& opts = {});

}  // namespace qplab::elliptic
