#pragma once

#include <array>
#include <optional>
#include <utility>

#include "qplab/check_report.hpp"
#include "qplab/elliptic.hpp"
#include "qplab/multipoly.hpp"
#include "qplab/rational.hpp"

namespace qplab::family {

// Projective parameter tuple [a : b : c : d] selecting a curve of the
// bidegree-(3,3) family with triple involutions.
struct Params {
    Rational a, b, c, d;
};

// Throws DegenerateParameters unless (a,b,c,d) != 0, c != d and
// (a+b)^2 != (c+d)^2 (the conditions making A0 and A1 nonzero).
void validate(const Params& p);

// Scales so the first nonzero coordinate is 1 (projective normal form).
Params normalized(const Params& p);

// Connected-component label (lambda, mu) in {+-1}^2.
struct ComponentLabel {
    int lambda = 1;
    int mu = 1;
    friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

// Coefficients of the two cubic models y_i^2 = A_i x^3 + B_i x^2 + C_i x + D_i
// and of their depressed forms Y^2 = X^3 + p_i X + q_i.
struct QuotientData {
    Rational A0, B0, C0, D0;
    Rational A1, B1, C1, D1;
    Rational p0, q0, p1, q1;
};

QuotientData quotient_data(const Params& p);

struct Genus4Curve {
    Params params;
    QuotientData quot;
    MultiPoly equation;  // the defining (3,3) polynomial F(x, y)
};

// Validates the parameters and assembles the curve with its derived data.
Genus4Curve make_curve(const Params& p);

// The universal equation of the component (lambda, mu) at the given
// parameters, in variables x, y.
MultiPoly component_equation(const ComponentLabel& label, const Params& p);

// Tests f(-x,-y) = lambda f and x^3 y^3 f(1/x,1/y) = mu f for
// lambda, mu in {+-1}; nullopt when some symmetry fails. f must be a nonzero
// polynomial in x, y of bidegree at most (3, 3).
std::optional<ComponentLabel> classify(const MultiPoly& f);

// Involution of P^1 applied to one coordinate axis.
enum class Involution { Id, Omega1, Omega2, Omega3 };  // x, -x, 1/x, -1/x

struct TranslateResult {
    ComponentLabel label;
    Params params;
};

// Applies (gx, gy) to the coordinates of f (clearing denominators with the
// fixed weight x^3 y^3), classifies the image and reads off its parameters in
// the component's normal form.
TranslateResult translate_poly(const MultiPoly& f, Involution gx, Involution gy);

// Same, starting from the component-(1,1) curve of the given parameters.
TranslateResult translate_component(const Params& p, Involution gx, Involution gy);

// Genus-2 quotient w^2 = sum s_k u^k; always palindromic (s6 = s0, s5 = s1,
// s4 = s2).
class SexticModel {
public:
    explicit SexticModel(std::array<Rational, 7> coeffs);  // ascending, s[k] of u^k

    const std::array<Rational, 7>& s() const { return s_; }
    const Rational& operator[](size_t k) const { return s_[k]; }

    // Discriminant of the degree-6 polynomial; nonzero iff the hyperelliptic
    // model is smooth.
    Rational discriminant() const;

private:
    std::array<Rational, 7> s_;
};

// Coefficients of the genus-2 quotient for arbitrary parameters (no tuple
// validation; the closed form is defined for every tuple).
std::array<Rational, 7> sextic_coefficients(const Params& p);

SexticModel genus2_model(const Genus4Curve& curve);

enum class Factor { E0, E1 };

// The two elliptic quotients Y^2 = X^3 + p_i X + q_i.
// Throws SingularQuotient naming the factor whose discriminant vanishes.
std::pair<elliptic::Curve, elliptic::Curve> elliptic_quotients(const Genus4Curve& curve);

elliptic::Curve elliptic_quotient(const Genus4Curve& curve, Factor which);

// Image of the canonical quadratic point's building block: P_{E_i} =
// (B_i/3, A_i a), checked exactly on-curve.
elliptic::Point xi_projection(const Genus4Curve& curve, Factor which);

// [6] xi_projection, the projection of the canonical quadratic point itself.
elliptic::Point xi_image(const Genus4Curve& curve, Factor which);

// Compares x([2]P_{E0}) with B0/3 + 4cd and x([2]P_{E1}) with
// B1/3 + 4cd - 4ab, exactly. Throws TwoTorsionInput when P_{E_i} is
// 2-torsion (a = 0).
CheckReport check_double_x_formula(const Genus4Curve& curve, Factor which);

// Quartic model v^2 = sum coeffs[k] u^k of degree 4.
struct QuarticModel {
    std::array<Rational, 5> coeffs;
    friend bool operator==(const QuarticModel&, const QuarticModel&) = default;
};

// Expanded models of the two elliptic quotients of a genus-2 curve with
// split ramification: v^2 = (u +- 2)(u - a1)(u - a2)(u - a3). The a_i must be
// pairwise distinct and avoid +-2, else the quartic is singular.
std::pair<QuarticModel, QuarticModel> eplus_eminus(const Rational& a1, const Rational& a2,
                                                   const Rational& a3);

// Riemann-Hurwitz bookkeeping for a degree-d cover with total ramification
// `ram_sum`: 2 g_cover - 2 = degree (2 g_base - 2) + ram_sum, both directions.
int genus_of_cover(int genus_base, int degree, int ram_sum);
int genus_of_base(int genus_cover, int degree, int ram_sum);

// --- symbolic identity suite (structural equality over Q[a,b,c,d,...]) ---

// (a(1+u^3) + bu(1+u))^2 - 4(c+du)(cu+d)u^2 equals the displayed sextic.
// A nonzero perturbation is added to the u^3 coefficient of the claimed right
// side to exercise the failure path.
CheckReport verify_sextic_identity(const Rational& s3_perturbation = Rational(0));

// The Weierstrass chain for both factors: completing the cube under
// X = A_i x_i + B_i/3, Y = A_i y_i, and the pulled-back fraction identities
// sextic(u) = (1+u)^6 cubic0(-u/(1+u)^2) = (u-1)^6 cubic1(u/(u-1)^2).
// flip_b0_sign injects a faulty B0 to exercise the failure path.
CheckReport verify_weierstrass_transform(bool flip_b0_sign = false);

// The section at y = 0 maps to (B_i/3, -A_i a) = -P_{E_i} on both factors.
CheckReport verify_q_image_symmetry();

// The W^2-translation table between the four components, on sample
// parameters for every coset representative.
CheckReport verify_translation_table();

// The split v^2 = (u +- 2) prod (u - a_i) pulled back along u = x + 1/x
// equals (x^{-1} +- x^{-2})^2 prod (x^2 - a_i x + 1), symbolically.
CheckReport verify_quartic_split();

// Riemann-Hurwitz consistency of the quotient tower (genus-2 quotients of a
// genus-4 curve, and the degree-5 cover with ramification 16).
CheckReport verify_riemann_hurwitz();

}  // namespace qplab::family
