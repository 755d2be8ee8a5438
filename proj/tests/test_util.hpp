#pragma once

#include <random>

#include "qplab/family.hpp"
#include "qplab/multipoly.hpp"
#include "qplab/rational.hpp"

namespace qplab::testutil {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x51ab5eed);
    return gen;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational rand_rational(long num_bound = 20, long den_bound = 10) {
    return Rational(rand_int(-num_bound, num_bound), rand_int(1, den_bound));
}

inline Rational rand_nonzero_rational(long num_bound = 20, long den_bound = 10) {
    for (;;) {
        Rational r = rand_rational(num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

// random polynomial in the given variables with small degrees and few terms
inline MultiPoly rand_poly(const std::vector<std::string>& vars, int max_deg = 3, int terms = 4) {
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
        MultiPoly mono = MultiPoly::constant(rand_rational(9, 4));
        for (const auto& v : vars) {
            const int e = static_cast<int>(rand_int(0, max_deg));
            mono = mono * MultiPoly::var(v).pow(static_cast<unsigned>(e));
        }
        p = p + mono;
    }
    return p;
}

// a random tuple passing the family preconditions, with a != 0
inline family::Params rand_valid_params(long bound = 12) {
    for (;;) {
        family::Params p{Rational(rand_int(-bound, bound)), Rational(rand_int(-bound, bound)),
                         Rational(rand_int(-bound, bound)), Rational(rand_int(-bound, bound))};
        if (p.a.is_zero()) continue;
        try {
            family::validate(p);
            return p;
        } catch (const DegenerateParameters&) {
        }
    }
}

}  // namespace qplab::testutil
