#include "nilbu/epimorphisms.hpp"
#include "nilbu/homology.hpp"
#include "nilbu/sweep.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nilbu;

namespace {

// Brute force over all 0/1 assignments, checking exponent sums of every
// relator mod 2.
std::vector<std::vector<int>> brute_force_epis(const NilManifold& m) {
    const auto pres = fundamental_group(m.expand());
    const std::size_t n = pres.generators.size();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> values(n);
        for (std::size_t j = 0; j < n; ++j)
            values[j] = (mask >> (n - 1 - j)) & 1;
        bool ok = true;
        for (const auto& r : pres.relators) {
            Int total = 0;
            const auto sums = exponent_sums(r, n);
            for (std::size_t j = 0; j < n; ++j)
                total += sums[j] * values[j];
            ok = ok && total % 2 == 0;
        }
        if (ok)
            out.push_back(values);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t expected_count(const NilManifold& m) {
    const Int b = m.b();
    const auto& p = m.params();
    switch (m.family()) {
    case Family::T: return b % 2 == 0 ? 7 : 3;
    case Family::K: return b % 2 == 0 ? 7 : 3;
    case Family::F22: return 3;
    case Family::F2222: return 7;
    case Family::F236: return 1;
    case Family::F244: return 3;
    case Family::F333: return (b + p[0] + p[1] + p[2]) % 2 == 0 ? 1 : 0;
    }
    return 0;
}

std::vector<std::size_t> expected_sizes(const NilManifold& m) {
    const Int b = m.b();
    const auto& p = m.params();
    switch (m.family()) {
    case Family::T: return b % 2 == 0 ? std::vector<std::size_t>{4, 3} : std::vector<std::size_t>{3};
    case Family::K: return b % 2 == 0 ? std::vector<std::size_t>{4, 2, 1} : std::vector<std::size_t>{2, 1};
    case Family::F22: return {2, 1};
    case Family::F2222: return {6, 1};
    case Family::F236: return {1};
    case Family::F244: return p[0] == p[1] ? std::vector<std::size_t>{2, 1} : std::vector<std::size_t>{1, 1, 1};
    case Family::F333: return (b + p[0] + p[1] + p[2]) % 2 == 0 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{};
    }
    return {};
}

Z2Char chr(std::vector<int> s, std::vector<int> v, int h) { return Z2Char{std::move(s), std::move(v), h}; }

} // namespace

TEST_CASE("Z2Char values and encoding") {
    const auto phi = chr({1, 0}, {1}, 0);
    CHECK(phi.values() == std::vector<int>{1, 0, 1, 0});
    CHECK(Z2Char::from_values(phi.values(), 2, 1) == phi);
    CHECK(to_string(phi) == R"({"s":[1,0],"v":[1],"h":0})");
    CHECK(chr({}, {0, 1}, 0) < chr({}, {1, 0}, 0));
    CHECK_THROWS_AS(Z2Char::from_values(phi.values(), 2, 2), Error);
}

TEST_CASE("check_epimorphism") {
    const auto m = NilManifold::M22(0);
    CHECK_NOTHROW(check_epimorphism(m, chr({0, 0}, {1}, 0)));
    CHECK_THROWS_AS(check_epimorphism(m, chr({1, 0}, {1}, 0)), InvalidCharacter);
    CHECK_THROWS_AS(check_epimorphism(m, chr({0, 0}, {0}, 0)), InvalidCharacter);
    CHECK_THROWS_AS(check_epimorphism(m, chr({0}, {1}, 0)), InvalidCharacter);
    CHECK_THROWS_AS(check_epimorphism(m, chr({0, 0}, {2}, 0)), InvalidCharacter);
    CHECK_FALSE(is_epimorphism(m, chr({1, 0}, {1}, 0)));
}

TEST_CASE("enumeration examples") {
    for (Int b = -1; b < 6; ++b) {
        const auto epis = enumerate_epis(NilManifold::M2222(b));
        CHECK(epis.size() == 7);
        for (const auto& phi : epis) {
            CHECK(phi.h == 0);
            CHECK((phi.s[0] + phi.s[1] + phi.s[2] + phi.s[3]) % 2 == 0);
        }
    }
    for (Int b = 0; b < 4; ++b) {
        const auto epis = enumerate_epis(NilManifold::M236(b, 1, 5));
        REQUIRE(epis.size() == 1);
        CHECK(epis[0] == chr({1, 0, 1}, {}, 0));
    }
    CHECK(enumerate_epis(NilManifold::M333(0, 1, 1, 1)).empty());
    CHECK(enumerate_epis(NilManifold::M333(1, 1, 1, 1)).size() == 1);
}

TEST_CASE("enumeration matches brute force and counts") {
    for (const auto& m : sweep_manifolds(8)) {
        const auto epis = enumerate_epis(m);
        std::vector<std::vector<int>> values;
        for (const auto& phi : epis) {
            values.push_back(phi.values());
            CHECK(is_epimorphism(m, phi));
        }
        CHECK(std::is_sorted(epis.begin(), epis.end()));
        CHECK(values == brute_force_epis(m));
        CHECK(epis.size() == expected_count(m));
    }
}

TEST_CASE("moves") {
    SUBCASE("fibre twist on class T") {
        const auto m = NilManifold::T(2);
        CHECK(apply_move(chr({}, {0, 0}, 1), FibreTwist{{0}}, m) == chr({}, {1, 0}, 1));
        CHECK(apply_move(chr({}, {1, 1}, 1), FibreTwist{{0, 1}}, m) == chr({}, {0, 0}, 1));
        CHECK_THROWS_AS(apply_move(chr({}, {1, 0}, 0), FibreTwist{{0}}, m), MoveNotApplicable);
    }
    SUBCASE("section swap on class 2222") {
        const auto m = NilManifold::M2222(0);
        CHECK(apply_move(chr({1, 0, 0, 1}, {}, 0), SectionSwap{0, 1}, m) == chr({0, 1, 0, 1}, {}, 0));
        CHECK_THROWS_AS(apply_move(chr({1, 0, 0, 1}, {}, 0), SectionSwap{0, 4}, m), MoveNotApplicable);
    }
    SUBCASE("section swap needs equal pairs") {
        const auto m = NilManifold::M244(0, 1, 3);
        CHECK_THROWS_AS(apply_move(chr({0, 1, 1}, {}, 0), SectionSwap{1, 2}, m), MoveNotApplicable);
        const auto same = NilManifold::M244(0, 1, 1);
        CHECK(apply_move(chr({1, 1, 0}, {}, 0), SectionSwap{1, 2}, same) == chr({1, 0, 1}, {}, 0));
    }
    SUBCASE("Klein swap") {
        const auto m = NilManifold::K(2);
        CHECK(apply_move(chr({}, {1, 0}, 0), KleinSwap{}, m) == chr({}, {0, 1}, 0));
        CHECK_THROWS_AS(apply_move(chr({}, {1, 1}, 0), KleinSwap{}, m), MoveNotApplicable);
        CHECK_THROWS_AS(apply_move(chr({}, {1, 0}, 0), KleinSwap{}, NilManifold::T(2)),
                        MoveNotApplicable);
    }
    SUBCASE("torus shear") {
        const auto m = NilManifold::T(3);
        CHECK(apply_move(chr({}, {1, 1}, 0), TorusShear{{1, 0}}, m) == chr({}, {1, 0}, 0));
        CHECK(apply_move(chr({}, {0, 1}, 0), TorusShear{{1, 1}}, m) == chr({}, {1, 1}, 0));
        CHECK_THROWS_AS(apply_move(chr({}, {1, 1}, 0), TorusShear{{1, 1}}, m), MoveNotApplicable);
    }
    SUBCASE("22 twist") {
        const auto m = NilManifold::M22(1);
        CHECK(apply_move(chr({1, 1}, {0}, 0), TwoTwoTwist{}, m) == chr({1, 1}, {1}, 0));
        CHECK_THROWS_AS(apply_move(chr({0, 0}, {1}, 0), TwoTwoTwist{}, m), MoveNotApplicable);
    }
    SUBCASE("moves preserve epimorphisms") {
        for (const auto& m : sweep_manifolds(6))
            for (const auto& phi : enumerate_epis(m))
                for (const auto& move : applicable_moves(phi, m)) {
                    const auto image = apply_move(phi, move, m);
                    CHECK(is_epimorphism(m, image));
                    CHECK(image != phi);
                }
    }
}

TEST_CASE("partition examples") {
    for (Int b = -1; b < 5; ++b)
        CHECK(equivalence_classes(NilManifold::M2222(b)).sizes() == std::vector<std::size_t>{6, 1});
    CHECK(equivalence_classes(NilManifold::M244(0, 1, 3)).sizes() ==
          std::vector<std::size_t>{1, 1, 1});
    const auto t = equivalence_classes(NilManifold::T(2));
    auto sizes = t.sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{3, 4});
    CHECK(t.class_of(chr({}, {1, 0}, 0)) == t.class_of(chr({}, {1, 1}, 0)));
    CHECK(t.class_of(chr({}, {1, 0}, 1)) != t.class_of(chr({}, {1, 0}, 0)));
    CHECK_THROWS_AS(t.class_of(chr({}, {0, 0}, 0)), InvalidCharacter);
}

TEST_CASE("partitions over the sweep") {
    for (const auto& m : sweep_manifolds(8)) {
        const auto part = equivalence_classes(m);
        auto sizes = part.sizes();
        std::sort(sizes.rbegin(), sizes.rend());
        CHECK(sizes == expected_sizes(m));

        std::vector<Z2Char> all;
        for (const auto& cls : part.classes) {
            CHECK(cls.representative == cls.members.front());
            CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
            all.insert(all.end(), cls.members.begin(), cls.members.end());
            // closed under moves
            for (const auto& phi : cls.members)
                for (const auto& move : applicable_moves(phi, m))
                    CHECK(part.class_of(apply_move(phi, move, m)) == part.class_of(phi));
        }
        std::sort(all.begin(), all.end());
        CHECK(all == enumerate_epis(m));
    }
}
