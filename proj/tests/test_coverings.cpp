#include "nilbu/bu_index.hpp"
#include "nilbu/coverings.hpp"
#include "nilbu/homology.hpp"
#include "nilbu/presentation.hpp"
#include "nilbu/sweep.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

using namespace nilbu;

namespace {

Z2Char chr(std::vector<int> s, std::vector<int> v, int h) { return Z2Char{std::move(s), std::move(v), h}; }

Z2Char first_epi(const NilManifold& n, const std::function<bool(const Z2Char&)>& pred) {
    for (const auto& phi : enumerate_epis(n))
        if (pred(phi))
            return phi;
    FAIL("no epimorphism matches");
    return {};
}

std::vector<NilManifold> all_bases(Int span) {
    std::vector<NilManifold> out;
    for (Family f : kAllFamilies)
        for (const auto& option : family_options(f)) {
            const Int lo = b_min(family_pairs(f, option));
            for (Int b = lo; b <= lo + span; ++b)
                out.emplace_back(f, b, option);
        }
    return out;
}

} // namespace

TEST_CASE("double_cover examples") {
    for (Int b = 0; b < 5; ++b) {
        const auto n = NilManifold::M236(b, 1, 1);
        CHECK(double_cover(n, enumerate_epis(n).at(0)) == NilManifold::M333(2 * b + 1, 1, 1, 1));
    }
    for (Int b = 0; b < 5; ++b) {
        const auto n = NilManifold::M244(b, 1, 3);
        const auto phi = first_epi(n, [](const Z2Char& p) { return p.s[2] == 0; });
        CHECK(double_cover(n, phi) == NilManifold::M244(2 * b + 1, 3, 3));
    }
    for (Int b = 1; b < 6; ++b) {
        const auto n = NilManifold::K(b);
        CHECK(double_cover(n, chr({}, {1, 1}, 0)) == NilManifold::T(2 * b));
    }
    CHECK(double_cover(NilManifold::T(3), chr({}, {1, 0}, 0)) == NilManifold::T(6));
    CHECK(double_cover(NilManifold::T(2), chr({}, {0, 0}, 1)) == NilManifold::T(1));
    CHECK(double_cover(NilManifold::M2222(0), chr({1, 1, 1, 1}, {}, 0)) == NilManifold::T(4));
    CHECK(double_cover(NilManifold::M22(1), chr({0, 0}, {1}, 0)) == NilManifold::M2222(2));
    CHECK_THROWS_AS(double_cover(NilManifold::M22(1), chr({1, 0}, {1}, 0)), InvalidCharacter);
}

TEST_CASE("verify_cover") {
    const auto phi = chr({}, {1, 0}, 0);
    CHECK(verify_cover(NilManifold::T(3), phi, NilManifold::T(6)));
    CHECK_FALSE(verify_cover(NilManifold::T(3), phi, NilManifold::T(12)));
    const auto bad = check_cover(NilManifold::T(3), phi, NilManifold::T(12));
    CHECK_FALSE(bad.homology_matches);
    CHECK(bad.kernel_h1.torsion == std::vector<Int>{6});
    CHECK(bad.claimed_h1.torsion == std::vector<Int>{12});
    CHECK(verify_cover(NilManifold::M2222(0), chr({1, 1, 1, 1}, {}, 0), NilManifold::T(4)));
    // same H1 as T(6) would need e = 6; K(3) fails on both counts
    CHECK_FALSE(verify_cover(NilManifold::T(3), phi, NilManifold::K(3)));
}

TEST_CASE("covers over the sweep") {
    for (const auto& n : sweep_manifolds(8)) {
        const auto part = equivalence_classes(n);
        const Rational e = euler_number(n.expand());
        for (const auto& phi : enumerate_epis(n)) {
            const auto cover = double_cover(n, phi);
            const auto inv = cover.expand();
            CHECK(orbifold_euler_char(inv) == Rational(0));
            CHECK(euler_number(inv) == (phi.h == 0 ? e * Rational(2) : e / Rational(2)));

            // kernel homology straight from the presentation
            const auto values = phi.values();
            const auto kernel =
                abelianization(reidemeister_schreier(fundamental_group(n.expand()), values));
            CHECK(isomorphic(kernel, h1(cover)));
            CHECK(check_cover(n, phi, cover).ok());

            const auto& cls = part.classes[part.class_of(phi)];
            CHECK(double_cover(n, cls.representative) == cover);
            for (const auto& move : applicable_moves(phi, n))
                CHECK(double_cover(n, apply_move(phi, move, n)) == cover);
        }
    }
}

TEST_CASE("coverings_of lists one descriptor per class") {
    const auto ds = coverings_of(NilManifold::M2222(0));
    REQUIRE(ds.size() == 2);
    for (const auto& d : ds) {
        CHECK(d.base == NilManifold::M2222(0));
        CHECK(d.index == 2);
    }
}

TEST_CASE("quotients_of examples") {
    for (Int b = 0; b < 6; ++b)
        CHECK(quotients_of(NilManifold::M236(b, 1, 1)).empty());
    for (Int b = 1; b < 12; b += 2) {
        const auto qs = quotients_of(NilManifold::T(b));
        REQUIRE(qs.size() == 1);
        CHECK(qs[0].base == NilManifold::T(2 * b));
        CHECK(qs[0].index == 3);
        CHECK(qs[0].cover == NilManifold::T(b));
    }
    for (Int b = 0; b < 12; b += 2) {
        const auto qs = quotients_of(NilManifold::M2222(b));
        REQUIRE(qs.size() == 4);
        std::vector<NilManifold> bases;
        for (const auto& d : qs) {
            bases.push_back(d.base);
            CHECK(d.index == 2);
        }
        std::vector<NilManifold> expected{NilManifold::M2222(b / 2 - 1), NilManifold::M22(b / 2),
                                          NilManifold::M244(b / 2 - 1, 3, 3),
                                          NilManifold::M244(b / 2, 1, 1)};
        std::sort(bases.begin(), bases.end());
        std::sort(expected.begin(), expected.end());
        CHECK(bases == expected);
    }
}

TEST_CASE("quotients_of agrees with exhaustive search") {
    // Every cover of a base in a wide range, grouped by total space.
    std::map<NilManifold, std::vector<std::pair<NilManifold, Z2Char>>> by_cover;
    for (const auto& n : all_bases(40))
        for (const auto& cls : equivalence_classes(n).classes)
            by_cover[double_cover(n, cls.representative)].push_back({n, cls.representative});

    for (const auto& m : sweep_manifolds(8)) {
        auto expected = by_cover[m];
        std::vector<std::pair<NilManifold, Z2Char>> got;
        for (const auto& d : quotients_of(m)) {
            got.push_back({d.base, d.phi});
            CHECK(d.cover == m);
            CHECK(d.index == z2_index(d.base, d.phi));
        }
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("quotients_of inverts double_cover") {
    for (const auto& n : sweep_manifolds(6))
        for (const auto& phi : enumerate_epis(n)) {
            const auto qs = quotients_of(double_cover(n, phi));
            const auto part = equivalence_classes(n);
            const auto& rep = part.classes[part.class_of(phi)].representative;
            const bool found = std::any_of(qs.begin(), qs.end(), [&](const CoveringDescriptor& d) {
                return d.base == n && d.phi == rep;
            });
            CHECK(found);
        }
}
