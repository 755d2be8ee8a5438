#include "qplab/cm.hpp"

#include <algorithm>
#include <set>

#include "qplab/errors.hpp"

namespace qplab::cm {

namespace {
constexpr long kModulus = 15;
}

CMType::CMType(std::array<Residue, 4> e) : entries(std::move(e)) {
    for (const auto& r : entries) {
        if (r.modulus() != kModulus) throw ModulusMismatch("CM type entries live mod 15");
        if (!r.is_unit()) throw NotAUnit("CM type entry " + r.str() + " is not a unit");
    }
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (entries[i] == entries[j]) throw Error("CM type entries must be pairwise distinct");
}

std::array<long, 4> CMType::signed_reps() const {
    return {entries[0].signed_rep(), entries[1].signed_rep(), entries[2].signed_rep(),
            entries[3].signed_rep()};
}

Residue differential_weight(int alpha, int beta) {
    return Residue(3L * (alpha + 1) - 5L * beta, kModulus);
}

CMType cm_type() {
    // basis dy/x, dy/x^2, y^2 dy/x^2, y dy/x^2  ->  weights -2, -7, -1, -4
    std::array<Residue, 4> weights = {
        differential_weight(0, 1),
        differential_weight(0, 2),
        differential_weight(2, 2),
        differential_weight(1, 2),
    };
    // displayed by descending signed representative: (-1, -2, -4, -7)
    std::sort(weights.begin(), weights.end(),
              [](const Residue& a, const Residue& b) { return a.signed_rep() > b.signed_rep(); });
    return CMType(weights);
}

std::array<long, 4> orbit_row(const Residue& r, const CMType& type) {
    if (!r.is_unit()) throw NotAUnit(r.str() + " is not a unit");
    std::array<long, 4> out{};
    for (size_t i = 0; i < 4; ++i) out[i] = (r * type.entries[i]).signed_rep();
    return out;
}

std::vector<Residue> stabilizer(const CMType& type) {
    const std::set<Residue> entry_set(type.entries.begin(), type.entries.end());
    std::vector<Residue> stab;
    for (const auto& r : units_mod(kModulus)) {
        std::set<Residue> scaled;
        for (const auto& e : type.entries) scaled.insert(r * e);
        if (scaled == entry_set) stab.push_back(r);
    }
    return stab;
}

SimplicityCertificate simplicity_certificate(const CMType& type) {
    SimplicityCertificate cert;
    cert.cm_type = type.signed_reps();

    const std::set<Residue> entry_set(type.entries.begin(), type.entries.end());
    for (const auto& r : units_mod(kModulus)) {
        OrbitRow row;
        row.r = r.value();
        row.row = orbit_row(r, type);
        std::set<Residue> scaled;
        for (const auto& e : type.entries) scaled.insert(r * e);
        row.equals_type = (scaled == entry_set);
        cert.orbit_table.push_back(row);
    }
    for (const auto& r : stabilizer(type)) cert.stabilizer.push_back(r.value());
    cert.stabilizer_trivial = (cert.stabilizer.size() == 1 && cert.stabilizer[0] == 1);
    cert.verdict = cert.stabilizer_trivial
                       ? "enumeration confirms trivial stabilizer"
                       : "enumeration does not support simplicity";
    return cert;
}

}  // namespace qplab::cm
