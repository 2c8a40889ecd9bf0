#include "nilbu/bu_index.hpp"

#include "nilbu/homology.hpp"

namespace nilbu {

using namespace arith;

bool index_is_one(const NilManifold& n, const Z2Char& phi) {
    check_epimorphism(n, phi);
    const auto values = phi.values();
    return torsion_subgroup_killed_by(values, h1(n));
}

namespace {

struct CubeEvaluation {
    bool nonzero = false;
    std::string reason;
};

CubeEvaluation evaluate_cup_cube(const NilManifold& n, const Z2Char& phi) {
    check_epimorphism(n, phi);
    const SeifertInvariant inv = n.expand();
    const CdInvariants cd = cd_invariants(inv);
    if (cd.d == 0) {
        if (phi.h != 1)
            return {false, "d = 0 and phi(h) = 0"};
        if (inv.epsilon() == BaseOrientation::Orientable) {
            const bool hit = mod(cd.c, 4) == 2;
            return {hit, "d = 0, phi(h) = 1, eps = +1, c = " + std::to_string(cd.c) +
                             (hit ? " = 2 mod 4" : " != 2 mod 4")};
        }
        const Int shifted = add(cd.c, mul(2, inv.g_prime()));
        const bool hit = mod(shifted, 4) == 2;
        return {hit, "d = 0, phi(h) = 1, eps = -1, c + 2g' = " + std::to_string(shifted) +
                         (hit ? " = 2 mod 4" : " != 2 mod 4")};
    }
    Int sum = 0;
    for (std::size_t j = 0; j < inv.n(); ++j) {
        const Int a = inv.pairs()[j].a;
        if (a % 2 == 0)
            sum = add(sum, mul(phi.s[j], a / 2));
    }
    const bool hit = mod(sum, 2) == 1;
    return {hit, "d = " + std::to_string(cd.d) + ", sum phi(s_j) a_j/2 = " + std::to_string(sum) +
                     (hit ? " (odd)" : " (even)")};
}

} // namespace

bool cup_cube_nonzero(const NilManifold& n, const Z2Char& phi) {
    return evaluate_cup_cube(n, phi).nonzero;
}

int z2_index(const NilManifold& n, const Z2Char& phi) { return explain_index(n, phi).index; }

IndexTrace explain_index(const NilManifold& n, const Z2Char& phi) {
    const CubeEvaluation cube = evaluate_cup_cube(n, phi);
    const bool one = index_is_one(n, phi);
    if (cube.nonzero && one)
        throw Error("cup cube nonzero and phi factors through Z for " + to_string(n) + ", " +
                    to_string(phi));
    if (cube.nonzero)
        return {3, "cup cube nonzero: " + cube.reason};
    if (one)
        return {1, "phi kills the torsion of H1 (factors through Z -> Z_2)"};
    return {2, "cup cube zero (" + cube.reason + ") and phi is nonzero on torsion"};
}

std::optional<std::string> index_one_listing(const NilManifold& n, const Z2Char& phi) {
    check_epimorphism(n, phi);
    if (n.family() == Family::T && phi.h == 0)
        return "class T and phi(h) = 0";
    if (n.family() == Family::K && phi.h == 0 && phi.v[0] == 1 && phi.v[1] == 1)
        return "class K, phi(h) = 0 and (phi(v1), phi(v2)) = (1,1)";
    return std::nullopt;
}

std::optional<std::string> index_three_listing(const NilManifold& n, const Z2Char& phi) {
    check_epimorphism(n, phi);
    switch (n.family()) {
    case Family::T:
    case Family::K:
        if (mod(n.b(), 4) == 2 && phi.h == 1)
            return "class T or K, b = 2 mod 4 and phi(h) = 1";
        break;
    case Family::F333: {
        const Int sum = add(add(n.params()[0], n.params()[1]), n.params()[2]);
        if (mod(sub(n.b(), add(2, sum)), 4) == 0)
            return "class 333 and b = 2 + b1 + b2 + b3 mod 4";
        break;
    }
    case Family::F244:
        if (phi.s[0] == 1)
            return "class 244 and phi(s1) = 1";
        break;
    default: break;
    }
    return std::nullopt;
}

} // namespace nilbu
