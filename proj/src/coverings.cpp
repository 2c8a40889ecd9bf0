#include "nilbu/coverings.hpp"

#include "nilbu/bu_index.hpp"

#include <algorithm>

namespace nilbu {

using namespace arith;

NilManifold double_cover(const NilManifold& n, const Z2Char& phi) {
    check_epimorphism(n, phi);
    const Int b = n.b();
    const auto& p = n.params();
    switch (n.family()) {
    case Family::T:
        if (phi.h == 0)
            return NilManifold::T(mul(2, b));
        return NilManifold::T(b / 2);
    case Family::K:
        if (phi.h == 1)
            return NilManifold::K(b / 2);
        if ((phi.v[0] + phi.v[1]) % 2 == 1)
            return NilManifold::K(mul(2, b));
        return NilManifold::T(mul(2, b));
    case Family::F22:
        if (phi.s[1] == 1)
            return NilManifold::K(add(mul(2, b), 2));
        return NilManifold::M2222(mul(2, b));
    case Family::F2222: {
        const int ones = phi.s[0] + phi.s[1] + phi.s[2] + phi.s[3];
        if (ones == 4)
            return NilManifold::T(add(mul(2, b), 4));
        return NilManifold::M2222(add(mul(2, b), 2));
    }
    case Family::F236: {
        const Int q = (p[1] + 3) / 4;
        return NilManifold::M333(add(mul(2, b), q), p[0], p[0], q);
    }
    case Family::F244:
        if (phi.s[2] == 0)
            return NilManifold::M244(add(mul(2, b), (p[0] + 1) / 2), p[1], p[1]);
        if (phi.s[1] == 0)
            return NilManifold::M244(add(mul(2, b), (p[1] + 1) / 2), p[0], p[0]);
        return NilManifold::M2222(add(sub(mul(2, b), 1), (p[0] + p[1]) / 2));
    case Family::F333: {
        const Int sum = add(add(b, p[0]), add(p[1], p[2]));
        return NilManifold::M333(sub(sum, 6) / 2, 3 - p[2], 3 - p[1], 3 - p[0]);
    }
    }
    throw InvalidCharacter("unknown family");
}

CoverCheck check_cover(const NilManifold& n, const Z2Char& phi, const NilManifold& claimed) {
    check_epimorphism(n, phi);
    CoverCheck out;
    const auto values = phi.values();
    out.kernel_h1 = abelianization(reidemeister_schreier(fundamental_group(n.expand()), values));
    out.claimed_h1 = h1(claimed);
    out.homology_matches = isomorphic(out.kernel_h1, out.claimed_h1);
    out.base_euler = euler_number(n.expand());
    out.claimed_euler = euler_number(claimed.expand());
    const Rational expected =
        phi.h == 0 ? out.base_euler * Rational(2) : out.base_euler / Rational(2);
    out.euler_matches = out.claimed_euler == expected;
    return out;
}

bool verify_cover(const NilManifold& n, const Z2Char& phi, const NilManifold& claimed) {
    return check_cover(n, phi, claimed).ok();
}

std::vector<NilManifold> manifolds_with_euler(const Rational& target) {
    std::vector<NilManifold> out;
    for (Family f : kAllFamilies) {
        for (const auto& option : family_options(f)) {
            const auto pairs = family_pairs(f, option);
            Rational offset;
            for (const auto& pr : pairs)
                offset += Rational(pr.beta, pr.a);
            const Rational b = target - offset;
            if (!b.is_integer() || b.numerator() < b_min(pairs))
                continue;
            out.emplace_back(f, b.numerator(), option);
        }
    }
    return out;
}

namespace {

void sort_descriptors(std::vector<CoveringDescriptor>& ds) {
    std::sort(ds.begin(), ds.end(), [](const CoveringDescriptor& x, const CoveringDescriptor& y) {
        const auto xb = to_string(x.base), yb = to_string(y.base);
        if (xb != yb)
            return xb < yb;
        return x.phi < y.phi;
    });
}

} // namespace

std::vector<CoveringDescriptor> coverings_of(const NilManifold& n) {
    std::vector<CoveringDescriptor> out;
    for (const auto& cls : equivalence_classes(n).classes)
        out.push_back({n, cls.representative, double_cover(n, cls.representative),
                       z2_index(n, cls.representative)});
    return out;
}

std::vector<CoveringDescriptor> quotients_of(const NilManifold& m) {
    const Rational e = euler_number(m.expand());
    std::vector<CoveringDescriptor> out;
    for (const Rational& target : {e / Rational(2), e * Rational(2)})
        for (const auto& base : manifolds_with_euler(target))
            for (auto& d : coverings_of(base))
                if (d.cover == m)
                    out.push_back(std::move(d));
    sort_descriptors(out);
    return out;
}

} // namespace nilbu
