#pragma once

#include <array>
#include <string>
#include <vector>

#include "qplab/residue.hpp"

namespace qplab::cm {

// CM type of the zeta_15 action on the genus-4 curve y^5 = x^3 - 1: four
// pairwise distinct units mod 15.
struct CMType {
    std::array<Residue, 4> entries;

    explicit CMType(std::array<Residue, 4> e);

    std::array<long, 4> signed_reps() const;
};

// zeta_15-exponent of the differential y^alpha x^{-beta} dy under
// (x, y) -> (zeta_3 x, zeta_5 y), with zeta_3 = zeta_15^5 and
// zeta_5 = zeta_15^3: the class of 3(alpha + 1) - 5 beta mod 15.
Residue differential_weight(int alpha, int beta);

// The CM type computed from the standard differential basis
// dy/x, dy/x^2, y^2 dy/x^2, y dy/x^2, ordered by descending signed
// representative: (-1, -2, -4, -7).
CMType cm_type();

// (r b_1, ..., r b_4) mod 15 in signed representatives; r must be a unit.
std::array<long, 4> orbit_row(const Residue& r, const CMType& type = cm_type());

// All units r mod 15 with r * {entries} = {entries} as sets; contains 1.
std::vector<Residue> stabilizer(const CMType& type);

struct OrbitRow {
    long r = 0;
    std::array<long, 4> row{};
    bool equals_type = false;
};

struct SimplicityCertificate {
    std::array<long, 4> cm_type{};    // signed representatives
    std::vector<OrbitRow> orbit_table;  // one row per unit mod 15
    std::vector<long> stabilizer;
    bool stabilizer_trivial = false;
    std::string verdict;
};

// Full enumeration over the 8 units mod 15: the orbit table, the stabilizer,
// and the resulting verdict. The certificate covers the enumeration only; the
// inference "trivial stabilizer => simple Jacobian" is external algebra.
SimplicityCertificate simplicity_certificate(const CMType& type = cm_type());

}  // namespace qplab::cm
