#pragma once

#include <map>
#include <string>
#include <vector>

#include "qplab/rational.hpp"

namespace qplab {

struct PolyFraction;

// Multivariate polynomial over Rational with named variables.
//
// The variable universe is the sorted list of names that actually occur in
// some term; exponent vectors are dense over that universe. Unused variables
// are trimmed and zero coefficients dropped after every operation, so equal
// polynomials compare equal structurally no matter how they were built.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;  // the zero polynomial

    static MultiPoly constant(const Rational& c);
    static MultiPoly var(const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int degree(const std::string& name) const;  // 0 if the variable is absent
    int total_degree() const;
    Rational constant_term() const;

    // Coefficient of the monomial var -> exponent (variables not listed have
    // exponent 0).
    Rational coeff(const std::map<std::string, int>& monomial) const;

    MultiPoly pow(unsigned e) const;

    // Exact evaluation; every variable of the polynomial must be bound.
    Rational eval(const std::map<std::string, Rational>& point) const;

    using Fraction = PolyFraction;
    using Bindings = std::map<std::string, PolyFraction>;

    // Substitutes variables by rational functions; unbound variables map to
    // themselves. The common denominator is prod_i den_i^{deg_i}; the result
    // is reduced by its rational content and sign-normalized (no polynomial
    // gcd is attempted).
    Fraction substitute(const Bindings& bindings) const;

    // Same, without the content/sign normalization.
    Fraction substitute_raw(const Bindings& bindings) const;

    // gcd of coefficient numerators over lcm of denominators; 0 for the zero
    // polynomial, positive otherwise.
    Rational content() const;

    std::string str() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        return p.vars_ == q.vars_ && p.terms_ == q.terms_;
    }

private:
    MultiPoly(std::vector<std::string> vars, TermMap terms);

    void normalize();  // drop zero coefficients, trim unused variables

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Quotient of polynomials; den is a nonzero polynomial.
struct PolyFraction {
    MultiPoly num;
    MultiPoly den;
};

inline MultiPoly operator+(const MultiPoly& p, const Rational& c) { return p + MultiPoly::constant(c); }
inline MultiPoly operator-(const MultiPoly& p, const Rational& c) { return p - MultiPoly::constant(c); }

}  // namespace qplab
