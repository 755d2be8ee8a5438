#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "qplab/gaussian.hpp"

namespace qplab::moduli {

// Moebius transformation x -> (a x + b) / (c x + d) over Q(i), stored as a
// 2x2 matrix in a canonical projective scaling: the first nonzero entry in
// row-major order is 1. Structural equality therefore coincides with
// projective equality.
class MobiusMap {
public:
    MobiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d);

    static MobiusMap identity();
    static MobiusMap omega1();  // x -> -x
    static MobiusMap omega2();  // x -> 1/x
    static MobiusMap omega3();  // x -> -1/x
    // the two generators completing W to its normalizer
    static MobiusMap transposition_g();  // [[1, 1], [1, -1]]
    static MobiusMap three_cycle_g();    // [[1, -i], [1, i]]

    const GaussianRational& a() const { return e_[0]; }
    const GaussianRational& b() const { return e_[1]; }
    const GaussianRational& c() const { return e_[2]; }
    const GaussianRational& d() const { return e_[3]; }

    GaussianRational det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    MobiusMap inverse() const;

    friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);  // composition f after g

    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
    friend auto operator<=>(const MobiusMap&, const MobiusMap&) = default;

    std::string str() const;

private:
    std::array<GaussianRational, 4> e_;  // row-major
};

// Closure of the generators under composition; throws CapExceeded when the
// closure grows past `cap` elements.
std::set<MobiusMap> generate_group(const std::vector<MobiusMap>& generators, size_t cap = 100);

// Structure certificate for the normalizer of W = {id, w1, w2, w3}.
struct GroupCertificate {
    bool relations_pass = false;    // the defining relations of both generators
    size_t closure_order = 0;       // expected 24
    bool normalizes = false;        // every element conjugates W into W
    size_t kernel_size = 0;         // elements acting trivially on {w1,w2,w3}
    bool kernel_is_w = false;       // and that kernel is exactly W
    size_t image_size = 0;          // distinct permutations induced; expected 6
    bool nonabelian = false;
    size_t center_size = 0;         // expected 1 (projectively)
    bool pass = false;
    std::vector<std::string> notes;
};

// Verifies the conjugation relations of the transposition and 3-cycle
// generators, generates the order-24 closure, and certifies the semidirect
// structure W x S3 by computing the conjugation action on {w1, w2, w3}.
GroupCertificate verify_normalizer_relations();

}  // namespace qplab::moduli
