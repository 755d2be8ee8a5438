#include "qplab/elliptic.hpp"

#include <cmath>

#include "qplab/errors.hpp"

namespace qplab::elliptic {

namespace {

Rational four_p3_27q2(const Rational& p, const Rational& q) {
    return Rational(4) * p.pow(3) + Rational(27) * q * q;
}

}  // namespace

Curve::Curve(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
    if (four_p3_27q2(p_, q_).is_zero())
        throw SingularCurve("y^2 = x^3 + (" + p_.str() + ")x + (" + q_.str() + ") is singular");
}

Rational Curve::discriminant() const {
    return Rational(-16) * four_p3_27q2(p_, q_);
}

Rational Curve::j_invariant() const {
    return Rational(1728) * Rational(4) * p_.pow(3) / four_p3_27q2(p_, q_);
}

const Rational& Point::x() const {
    if (inf_) throw Error("x() of the point at infinity");
    return x_;
}

const Rational& Point::y() const {
    if (inf_) throw Error("y() of the point at infinity");
    return y_;
}

std::string Point::str() const {
    return inf_ ? "inf" : "(" + x_.str() + ", " + y_.str() + ")";
}

bool on_curve(const Curve& e, const Point& pt) {
    if (pt.is_infinity()) return true;
    return pt.y() * pt.y() == pt.x().pow(3) + e.p() * pt.x() + e.q();
}

Point neg(const Curve&, const Point& pt) {
    if (pt.is_infinity()) return pt;
    return Point(pt.x(), -pt.y());
}

Point add(const Curve& e, const Point& a, const Point& b) {
    if (a.is_infinity()) return b;
    if (b.is_infinity()) return a;
    if (a.x() == b.x()) {
        if (a.y() == -b.y()) return Point::infinity();  // includes y = 0
        // tangent slope
        const Rational s = (Rational(3) * a.x() * a.x() + e.p()) / (Rational(2) * a.y());
        const Rational x3 = s * s - Rational(2) * a.x();
        return Point(x3, s * (a.x() - x3) - a.y());
    }
    const Rational s = (b.y() - a.y()) / (b.x() - a.x());
    const Rational x3 = s * s - a.x() - b.x();
    return Point(x3, s * (a.x() - x3) - a.y());
}

Point mul(const Curve& e, long n, const Point& pt) {
    if (n < 0) return mul(e, -n, neg(e, pt));
    Point acc = Point::infinity();
    Point base = pt;
    while (n > 0) {
        if (n & 1L) acc = add(e, acc, base);
        n >>= 1L;
        if (n > 0) base = add(e, base, base);
    }
    return acc;
}

Rational x_double(const Curve& e, const Rational& x) {
    const Rational den = Rational(4) * (x.pow(3) + e.p() * x + e.q());
    if (den.is_zero()) throw TwoTorsionAbscissa("x = " + x.str() + " is a 2-torsion abscissa");
    const Rational num = x.pow(4) - Rational(2) * e.p() * x * x - Rational(8) * e.q() * x + e.p() * e.p();
    return num / den;
}

double naive_x_height(const Point& pt) {
    return pt.is_infinity() ? 0.0 : pt.x().log_height();
}

TorsionResult is_torsion(const Curve& e, const Point& pt) {
    Point acc = pt;
    for (int n = 1; n <= 12; ++n) {
        if (acc.is_infinity()) return {true, n};
        acc = add(e, acc, pt);
    }
    return {false, 0};
}

const Rational& height_normalization() {
    static const Rational one(1);
    return one;
}

HeightEstimate canonical_height(const Curve& e, const Point& pt, const HeightOptions& opts) {
    HeightEstimate out;
    out.normalization = height_normalization();
    if (is_torsion(e, pt).is_torsion) return out;  // exact zero, 0 iterations

    // Non-torsion input: no iterate [2^n]P can be 2-torsion, so x_double
    // never throws below.
    const double norm = out.normalization.to_double();
    Rational x = pt.x();
    double est = x.log_height();
    double increment = 0.0;
    int n = 0;
    while (n < opts.max_iters) {
        ++n;
        x = x_double(e, x);
        const double next = x.log_height() / std::pow(4.0, n);
        increment = std::abs(next - est);
        est = next;
        if (increment < opts.tolerance / 3.0) break;
    }
    out.value = norm * est;
    out.error_bound = norm * increment * (4.0 / 3.0);
    out.iterations = n;
    return out;
}

}  // namespace qplab::elliptic
