#include "nilbu/epimorphisms.hpp"
#include "nilbu/homology.hpp"
#include "nilbu/presentation.hpp"
#include "nilbu/sweep.hpp"

#include <doctest.h>

using namespace nilbu;

TEST_CASE("words stay freely reduced") {
    GroupWord w;
    w.append(0, 2);
    w.append(1, 1);
    w.append(1, -1);
    w.append(0, -1);
    CHECK(w == GroupWord{{0, false}});
    w.append(0, -1);
    CHECK(w.empty());

    const auto c = commutator(0, 1);
    CHECK(to_string(c, {"a", "b"}) == "a b a^-1 b^-1");
    GroupWord prod = c;
    prod.append(c.inverse());
    CHECK(prod.empty());
    CHECK(exponent_sums(c, 2) == std::vector<Int>{0, 0});
    CHECK(to_string(GroupWord{}, {"a"}) == "1");
}

TEST_CASE("fundamental group goldens") {
    CHECK(to_string(fundamental_group(NilManifold::T(3).expand())) ==
          "<v1,v2,h | v1 h v1^-1 h^-1, v2 h v2^-1 h^-1, v1 v2 v1^-1 v2^-1 h^-3>");
    CHECK(to_string(fundamental_group(NilManifold::K(2).expand())) ==
          "<v1,v2,h | v1 h v1^-1 h, v2 h v2^-1 h, v1^2 v2^2 h^-2>");
    CHECK(to_string(fundamental_group(NilManifold::M22(1).expand())) ==
          "<s1,s2,v1,h | s1 h s1^-1 h^-1, s2 h s2^-1 h^-1, s1^2 h, s2^2 h, v1 h v1^-1 h, "
          "s1 s2 v1^2 h^-1>");
    CHECK(to_string(fundamental_group(NilManifold::M236(0, 1, 5).expand())) ==
          "<s1,s2,s3,h | s1 h s1^-1 h^-1, s2 h s2^-1 h^-1, s3 h s3^-1 h^-1, s1^2 h, s2^3 h, "
          "s3^6 h^5, s1 s2 s3>");
}

TEST_CASE("generator lookup") {
    const auto pres = fundamental_group(NilManifold::M2222(0).expand());
    CHECK(pres.generators == std::vector<std::string>{"s1", "s2", "s3", "s4", "h"});
    CHECK(pres.generator_index("h") == 4);
    CHECK_THROWS_AS(pres.generator_index("v1"), Error);
}

TEST_CASE("evaluate_mod2") {
    const auto pres = fundamental_group(NilManifold::K(3).expand());
    const std::vector<int> phi{1, 0, 1};
    CHECK(evaluate_mod2(pres.relators[0], phi) == 0);
    CHECK(evaluate_mod2(pres.relators[2], phi) == 1);
}

TEST_CASE("Reidemeister-Schreier on the infinite cyclic group") {
    const FinitePresentation z{{"x"}, {}};
    const std::vector<int> phi{1};
    const auto sub = reidemeister_schreier(z, phi);
    CHECK(sub.generators.size() == 1);
    CHECK(sub.relators.empty());
    const auto ab = abelianization(sub);
    CHECK(ab.free_rank == 1);
    CHECK(ab.torsion.empty());
}

TEST_CASE("Reidemeister-Schreier kernels of known coverings") {
    SUBCASE("torus bundle, phi(v1) = 1") {
        for (Int b = 1; b <= 6; ++b) {
            const std::vector<int> phi{1, 0, 0};
            const auto ab =
                abelianization(reidemeister_schreier(fundamental_group(NilManifold::T(b).expand()), phi));
            CHECK(ab.free_rank == 2);
            CHECK(ab.torsion == std::vector<Int>{2 * b});
        }
    }
    SUBCASE("22(0), phi(v1) = 1 and phi(s) = 0 gives H1(2222(0))") {
        const std::vector<int> phi{0, 0, 1, 0};
        const auto ab =
            abelianization(reidemeister_schreier(fundamental_group(NilManifold::M22(0).expand()), phi));
        CHECK(ab.free_rank == 0);
        CHECK(ab.torsion == std::vector<Int>{2, 2, 8});
    }
    SUBCASE("a character that is not a homomorphism") {
        // s1 s2 v1^2 h^-b maps to phi(s1) + phi(s2) = 1
        const std::vector<int> phi{1, 0, 1, 0};
        CHECK_THROWS_AS(
            reidemeister_schreier(fundamental_group(NilManifold::M22(0).expand()), phi),
            NotAHomomorphism);
    }
    SUBCASE("zero character") {
        const std::vector<int> phi{0, 0, 0};
        CHECK_THROWS_AS(reidemeister_schreier(fundamental_group(NilManifold::T(1).expand()), phi),
                        NotSurjective);
    }
    SUBCASE("bad shapes") {
        const auto pres = fundamental_group(NilManifold::T(1).expand());
        const std::vector<int> short_phi{1, 0};
        const std::vector<int> bad_value{2, 0, 0};
        CHECK_THROWS_AS(reidemeister_schreier(pres, short_phi), InvalidCharacter);
        CHECK_THROWS_AS(reidemeister_schreier(pres, bad_value), InvalidCharacter);
        const std::vector<int> phi{1, 0, 0};
        CHECK_THROWS_AS(reidemeister_schreier(pres, phi, 1), InvalidCharacter);
    }
}

TEST_CASE("Reidemeister-Schreier sizes and transversal independence") {
    for (const auto& m : sweep_manifolds(5)) {
        const auto pres = fundamental_group(m.expand());
        for (const auto& phi : enumerate_epis(m)) {
            const auto values = phi.values();
            const auto sub = reidemeister_schreier(pres, values);
            CHECK(sub.generators.size() == 2 * pres.generators.size() - 1);
            CHECK(sub.relators.size() == 2 * pres.relators.size());
            const auto reference = abelianization(sub);
            for (std::size_t t = 0; t < values.size(); ++t) {
                if (values[t] != 1)
                    continue;
                const auto other = abelianization(reidemeister_schreier(pres, values, t));
                CHECK(isomorphic(other, reference));
            }
        }
    }
}
