#include "qplab/mobius.hpp"

#include <algorithm>
#include <map>

#include "qplab/errors.hpp"

namespace qplab::moduli {

MobiusMap::MobiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (auto& entry : e_) {
        if (entry.is_zero()) continue;
        const GaussianRational scale = entry.inverse();
        for (auto& x : e_) x = x * scale;
        break;
    }
    if (det().is_zero()) throw SingularMatrix("Moebius matrix has zero determinant");
}

MobiusMap MobiusMap::identity() {
    return MobiusMap(Rational(1), Rational(0), Rational(0), Rational(1));
}
MobiusMap MobiusMap::omega1() {
    return MobiusMap(Rational(-1), Rational(0), Rational(0), Rational(1));
}
MobiusMap MobiusMap::omega2() {
    return MobiusMap(Rational(0), Rational(1), Rational(1), Rational(0));
}
MobiusMap MobiusMap::omega3() {
    return MobiusMap(Rational(0), Rational(-1), Rational(1), Rational(0));
}
MobiusMap MobiusMap::transposition_g() {
    return MobiusMap(Rational(1), Rational(1), Rational(1), Rational(-1));
}
MobiusMap MobiusMap::three_cycle_g() {
    return MobiusMap(Rational(1), -GaussianRational::i(), Rational(1), GaussianRational::i());
}

MobiusMap MobiusMap::inverse() const {
    return MobiusMap(e_[3], -e_[1], -e_[2], e_[0]);
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
    return MobiusMap(f.e_[0] * g.e_[0] + f.e_[1] * g.e_[2], f.e_[0] * g.e_[1] + f.e_[1] * g.e_[3],
                     f.e_[2] * g.e_[0] + f.e_[3] * g.e_[2], f.e_[2] * g.e_[1] + f.e_[3] * g.e_[3]);
}

std::string MobiusMap::str() const {
    return "[[" + e_[0].str() + ", " + e_[1].str() + "], [" + e_[2].str() + ", " + e_[3].str() + "]]";
}

std::set<MobiusMap> generate_group(const std::vector<MobiusMap>& generators, size_t cap) {
    std::set<MobiusMap> elems;
    elems.insert(MobiusMap::identity());
    for (const auto& g : generators) elems.insert(g);

    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<MobiusMap> snapshot(elems.begin(), elems.end());
        for (const auto& f : snapshot) {
            for (const auto& g : snapshot) {
                if (elems.insert(f * g).second) {
                    grew = true;
                    if (elems.size() > cap)
                        throw CapExceeded("group closure exceeded cap of " + std::to_string(cap));
                }
            }
        }
    }
    return elems;
}

GroupCertificate verify_normalizer_relations() {
    GroupCertificate cert;
    const MobiusMap id = MobiusMap::identity();
    const MobiusMap w1 = MobiusMap::omega1();
    const MobiusMap w2 = MobiusMap::omega2();
    const MobiusMap w3 = MobiusMap::omega3();
    const MobiusMap gt = MobiusMap::transposition_g();
    const MobiusMap gc = MobiusMap::three_cycle_g();

    cert.notes.push_back("w3 = w1 o w2: " + std::string(w1 * w2 == w3 ? "ok" : "violated"));

    // transposition: g w1 = w2 g, g w2 = w1 g, g w3 = w3 g
    // 3-cycle:       g w1 = w2 g, g w2 = w3 g, g w3 = w1 g
    const bool transposition_ok = (gt * w1 == w2 * gt) && (gt * w2 == w1 * gt) && (gt * w3 == w3 * gt);
    const bool three_cycle_ok = (gc * w1 == w2 * gc) && (gc * w2 == w3 * gc) && (gc * w3 == w1 * gc);
    cert.relations_pass = (w1 * w2 == w3) && transposition_ok && three_cycle_ok;
    cert.notes.push_back("transposition relations: " + std::string(transposition_ok ? "ok" : "violated"));
    cert.notes.push_back("3-cycle relations: " + std::string(three_cycle_ok ? "ok" : "violated"));

    const std::set<MobiusMap> group = generate_group({w1, w2, gt, gc});
    cert.closure_order = group.size();

    const std::set<MobiusMap> w_set = {id, w1, w2, w3};
    const std::array<MobiusMap, 3> omegas = {w1, w2, w3};

    // conjugation action on {w1, w2, w3}
    cert.normalizes = true;
    std::set<std::array<int, 3>> permutations;
    std::set<MobiusMap> kernel;
    for (const auto& h : group) {
        const MobiusMap hinv = h.inverse();
        std::array<int, 3> perm = {-1, -1, -1};
        for (int i = 0; i < 3; ++i) {
            const MobiusMap conj = h * omegas[static_cast<size_t>(i)] * hinv;
            for (int j = 0; j < 3; ++j)
                if (conj == omegas[static_cast<size_t>(j)]) perm[static_cast<size_t>(i)] = j;
            if (perm[static_cast<size_t>(i)] < 0) cert.normalizes = false;
        }
        if (!cert.normalizes) break;
        permutations.insert(perm);
        if (perm == std::array<int, 3>{0, 1, 2}) kernel.insert(h);
    }
    if (cert.normalizes) {
        cert.kernel_size = kernel.size();
        cert.kernel_is_w = (kernel == w_set);
        cert.image_size = permutations.size();
    }

    // nonabelian with trivial center, modulo scalars
    size_t central = 0;
    for (const auto& h : group) {
        bool commutes_with_all = true;
        for (const auto& k : group)
            if (!(h * k == k * h)) {
                commutes_with_all = false;
                cert.nonabelian = true;
            }
        if (commutes_with_all) ++central;
    }
    cert.center_size = central;

    cert.pass = cert.relations_pass && cert.closure_order == 24 && cert.normalizes &&
                cert.kernel_is_w && cert.kernel_size == 4 && cert.image_size == 6 &&
                cert.nonabelian && cert.center_size == 1;
    cert.notes.push_back("closure order " + std::to_string(cert.closure_order) +
                         ", kernel of conjugation " + std::to_string(cert.kernel_size) +
                         ", induced permutations " + std::to_string(cert.image_size));
    return cert;
}

}  // namespace qplab::moduli
