#include "qplab/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace qplab {

namespace {

// Remaps a term map onto a larger universe. `where[i]` is the index of old
// variable i inside the new universe.
MultiPoly::TermMap remap(const MultiPoly::TermMap& terms, const std::vector<size_t>& where,
                         size_t universe_size) {
    MultiPoly::TermMap out;
    for (const auto& [exps, c] : terms) {
        MultiPoly::Exponents e(universe_size, 0);
        for (size_t i = 0; i < exps.size(); ++i) e[where[i]] = exps[i];
        out.emplace(std::move(e), c);
    }
    return out;
}

std::vector<size_t> positions(const std::vector<std::string>& sub, const std::vector<std::string>& all) {
    std::vector<size_t> where(sub.size());
    for (size_t i = 0; i < sub.size(); ++i)
        where[i] = static_cast<size_t>(std::lower_bound(all.begin(), all.end(), sub[i]) - all.begin());
    return where;
}

std::vector<std::string> merged_universe(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

void add_term(MultiPoly::TermMap& into, MultiPoly::Exponents exps, const Rational& c) {
    auto [it, fresh] = into.emplace(std::move(exps), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    normalize();
}

MultiPoly MultiPoly::constant(const Rational& c) {
    TermMap t;
    if (!c.is_zero()) t.emplace(Exponents{}, c);
    return MultiPoly({}, std::move(t));
}

MultiPoly MultiPoly::var(const std::string& name) {
    TermMap t;
    t.emplace(Exponents{1}, Rational(1));
    return MultiPoly({name}, std::move(t));
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);

    if (vars_.empty()) return;
    std::vector<int> maxdeg(vars_.size(), 0);
    for (const auto& [exps, c] : terms_)
        for (size_t i = 0; i < exps.size(); ++i) maxdeg[i] = std::max(maxdeg[i], exps[i]);

    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (maxdeg[i] > 0) keep.push_back(i);
    if (keep.size() == vars_.size()) return;

    std::vector<std::string> vars;
    vars.reserve(keep.size());
    for (size_t i : keep) vars.push_back(vars_[i]);
    TermMap trimmed;
    for (const auto& [exps, c] : terms_) {
        Exponents e(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) e[j] = exps[keep[j]];
        trimmed.emplace(std::move(e), c);
    }
    vars_ = std::move(vars);
    terms_ = std::move(trimmed);
}

int MultiPoly::degree(const std::string& name) const {
    const auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return 0;
    const size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [exps, c] : terms_) d = std::max(d, exps[idx]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [exps, c] : terms_) {
        int t = 0;
        for (int e : exps) t += e;
        d = std::max(d, t);
    }
    return d;
}

Rational MultiPoly::constant_term() const {
    const Exponents zero(vars_.size(), 0);
    const auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::coeff(const std::map<std::string, int>& monomial) const {
    Exponents want(vars_.size(), 0);
    for (const auto& [name, e] : monomial) {
        if (e == 0) continue;
        const auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) return Rational(0);
        want[static_cast<size_t>(it - vars_.begin())] = e;
    }
    const auto it = terms_.find(want);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    TermMap t;
    for (const auto& [exps, c] : terms_) t.emplace(exps, -c);
    return MultiPoly(vars_, std::move(t));
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    const auto u = merged_universe(p.vars_, q.vars_);
    auto terms = remap(p.terms_, positions(p.vars_, u), u.size());
    for (auto& [exps, c] : remap(q.terms_, positions(q.vars_, u), u.size()))
        add_term(terms, exps, c);
    return MultiPoly(u, std::move(terms));
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    const auto u = merged_universe(p.vars_, q.vars_);
    const auto pt = remap(p.terms_, positions(p.vars_, u), u.size());
    const auto qt = remap(q.terms_, positions(q.vars_, u), u.size());
    MultiPoly::TermMap terms;
    for (const auto& [pe, pc] : pt) {
        for (const auto& [qe, qc] : qt) {
            MultiPoly::Exponents e(u.size());
            for (size_t i = 0; i < u.size(); ++i) e[i] = pe[i] + qe[i];
            add_term(terms, std::move(e), pc * qc);
        }
    }
    return MultiPoly(u, std::move(terms));
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    if (c.is_zero()) return MultiPoly();
    MultiPoly::TermMap t;
    for (const auto& [exps, pc] : p.terms_) t.emplace(exps, c * pc);
    return MultiPoly(p.vars_, std::move(t));
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    // power tables per variable
    std::vector<std::vector<Rational>> powers(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        const auto it = point.find(vars_[i]);
        if (it == point.end()) throw UnboundVariable("unbound variable '" + vars_[i] + "' in eval");
        int maxdeg = 0;
        for (const auto& [exps, c] : terms_) maxdeg = std::max(maxdeg, exps[i]);
        powers[i].reserve(static_cast<size_t>(maxdeg) + 1);
        powers[i].push_back(Rational(1));
        for (int k = 1; k <= maxdeg; ++k) powers[i].push_back(powers[i].back() * it->second);
    }
    Rational out(0);
    for (const auto& [exps, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) t *= powers[i][static_cast<size_t>(exps[i])];
        out += t;
    }
    return out;
}

MultiPoly::Fraction MultiPoly::substitute_raw(const Bindings& bindings) const {
    for (const auto& [name, frac] : bindings)
        if (frac.den.is_zero())
            throw ZeroDenominatorBinding("zero denominator bound to '" + name + "'");

    // per-variable numerator/denominator and their power tables up to the
    // variable's maximal exponent in this polynomial
    std::vector<int> maxdeg(vars_.size(), 0);
    for (const auto& [exps, c] : terms_)
        for (size_t i = 0; i < exps.size(); ++i) maxdeg[i] = std::max(maxdeg[i], exps[i]);

    std::vector<std::vector<MultiPoly>> numpow(vars_.size()), denpow(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        const auto it = bindings.find(vars_[i]);
        const MultiPoly num = (it != bindings.end()) ? it->second.num : var(vars_[i]);
        const MultiPoly den = (it != bindings.end()) ? it->second.den : constant(Rational(1));
        numpow[i].push_back(constant(Rational(1)));
        denpow[i].push_back(constant(Rational(1)));
        for (int k = 1; k <= maxdeg[i]; ++k) {
            numpow[i].push_back(numpow[i].back() * num);
            denpow[i].push_back(denpow[i].back() * den);
        }
    }

    MultiPoly result_num;  // sum over terms of c * prod num_i^{e_i} den_i^{M_i - e_i}
    for (const auto& [exps, c] : terms_) {
        MultiPoly t = constant(c);
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0) t = t * numpow[i][static_cast<size_t>(exps[i])];
            const int def = maxdeg[i] - exps[i];
            if (def > 0) t = t * denpow[i][static_cast<size_t>(def)];
        }
        result_num = result_num + t;
    }
    MultiPoly result_den = constant(Rational(1));
    for (size_t i = 0; i < vars_.size(); ++i)
        if (maxdeg[i] > 0) result_den = result_den * denpow[i][static_cast<size_t>(maxdeg[i])];

    return {std::move(result_num), std::move(result_den)};
}

MultiPoly::Fraction MultiPoly::substitute(const Bindings& bindings) const {
    Fraction f = substitute_raw(bindings);
    if (f.num.is_zero()) return {MultiPoly(), constant(Rational(1))};

    const Rational g = rational_gcd(f.num.content(), f.den.content());
    const Rational scale = g.inverse();
    f.num = scale * f.num;
    f.den = scale * f.den;

    // sign convention: leading coefficient of the denominator positive
    if (f.den.terms().rbegin()->second.sign() < 0) {
        f.num = -f.num;
        f.den = -f.den;
    }
    return f;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    BigInt g(0), l(1);
    for (const auto& [exps, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(::abs(g), l);
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending term order reads like handwritten polynomials
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, c] = *it;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) {
            os << a.str();
        } else {
            if (!(a == Rational(1))) os << a.str() << "*";
            os << mono;
        }
    }
    return os.str();
}

}  // namespace qplab
