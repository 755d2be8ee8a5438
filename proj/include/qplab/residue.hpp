#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "qplab/errors.hpp"

namespace qplab {

// Residue class modulo a fixed positive integer; the stored value is always
// reduced into [0, modulus).
class Residue {
public:
    Residue(long value, long modulus) : n_(modulus) {
        if (modulus < 1) throw Error("modulus must be positive");
        v_ = ((value % n_) + n_) % n_;
    }

    long value() const { return v_; }
    long modulus() const { return n_; }

    // Representative in (-n/2, n/2]; the display convention used for tables
    // over small odd moduli.
    long signed_rep() const { return 2 * v_ > n_ ? v_ - n_ : v_; }

    bool is_unit() const { return std::gcd(v_, n_) == 1; }

    friend Residue operator+(const Residue& a, const Residue& b) {
        return Residue(a.check(b).v_ + b.v_, a.n_);
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        return Residue(a.check(b).v_ - b.v_, a.n_);
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        return Residue(a.check(b).v_ * b.v_, a.n_);
    }

    friend bool operator==(const Residue&, const Residue&) = default;
    friend std::strong_ordering operator<=>(const Residue&, const Residue&) = default;

    std::string str() const { return std::to_string(v_) + " mod " + std::to_string(n_); }

private:
    const Residue& check(const Residue& other) const {
        if (n_ != other.n_) throw ModulusMismatch("residue arithmetic across different moduli");
        return *this;
    }

    long v_;
    long n_;
};

// All residues coprime to n, in ascending order of value.
inline std::vector<Residue> units_mod(long n) {
    if (n < 1) throw Error("modulus must be positive");
    std::vector<Residue> out;
    for (long r = 0; r < n; ++r)
        if (std::gcd(r, n) == 1) out.emplace_back(r, n);  // n=1: gcd(0,1)=1, trivial group
    return out;
}

}  // namespace qplab
