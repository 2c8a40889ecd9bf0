#pragma once

#include "nilbu/epimorphisms.hpp"
#include "nilbu/seifert.hpp"

#include <optional>
#include <string>

namespace nilbu {

// Z2-index of the double covering N_phi -> N. All functions require phi to be
// an epimorphism of pi_1(N) and throw InvalidCharacter otherwise.

/// Index 1 iff phi factors through Z -> Z_2, i.e. phi kills the torsion of H_1(N).
bool index_is_one(const NilManifold& n, const Z2Char& phi);

/// phi^3 != 0 in H^3(N; Z_2). Closed form in terms of c, d, eps, g' and
/// phi(h), phi(s_j); the d > 0 sum runs over even a_j and is read mod 2.
bool cup_cube_nonzero(const NilManifold& n, const Z2Char& phi);

/// 3 if the cup cube is nonzero, else 1 if phi kills torsion, else 2.
int z2_index(const NilManifold& n, const Z2Char& phi);

// Explicit per-family lists, kept as an independent cross-check of the
// general criteria above. Each returns the matching bullet, if any.
std::optional<std::string> index_one_listing(const NilManifold& n, const Z2Char& phi);
std::optional<std::string> index_three_listing(const NilManifold& n, const Z2Char& phi);

struct IndexTrace {
    int index = 2;
    std::string criterion; ///< which condition decided the value
};

IndexTrace explain_index(const NilManifold& n, const Z2Char& phi);

} // namespace nilbu
