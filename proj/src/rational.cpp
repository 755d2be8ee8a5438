#include "qplab/rational.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

namespace qplab {

namespace {

mpq_class make_canonical(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return v;
}

}  // namespace

Rational::Rational(long num, long den) : v_(make_canonical(BigInt(num), BigInt(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(make_canonical(num, den)) {}

Rational Rational::parse(const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty rational literal");
    const std::string s = text.substr(first, last - first + 1);

    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos)
            throw ParseError("malformed rational literal: '" + text + "'");
        BigInt d(den);
        if (d == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
        return Rational(BigInt(num), d);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: '" + text + "'");
    }
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(den(), num());
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    // num and den are coprime, so powering them separately stays canonical
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.v_ = mpq_class(n, d);
    return r;
}

double Rational::log_height() const {
    BigInt n = ::abs(num());
    BigInt d = den();
    const BigInt& m = (n >= d) ? n : d;  // m >= 1 always
    long exp2 = 0;
    const double frac = mpz_get_d_2exp(&exp2, m.get_mpz_t());
    return std::log(frac) + static_cast<double>(exp2) * std::log(2.0);
}

std::string Rational::decimal(int significant_digits) const {
    mpf_t f;
    mpf_init2(f, 256);
    mpf_set_q(f, v_.get_mpq_t());
    std::vector<char> buf(64 + static_cast<size_t>(significant_digits));
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f);
    mpf_clear(f);
    return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    BigInt g, l;
    mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(g, l);
}

}  // namespace qplab
