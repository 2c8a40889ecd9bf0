#pragma once

#include "nilbu/epimorphisms.hpp"
#include "nilbu/homology.hpp"
#include "nilbu/seifert.hpp"

#include <string>
#include <vector>

namespace nilbu {

/// A double covering cover -> base with characteristic class phi.
struct CoveringDescriptor {
    NilManifold base;
    Z2Char phi; ///< canonical representative of its equivalence class
    NilManifold cover;
    int index = 0; ///< Z2-index of (cover, deck involution)
};

/// Total space of the double covering of n with characteristic class phi,
/// from the per-family case analysis. Throws InvalidCharacter when phi is not
/// an epimorphism of pi_1(n).
NilManifold double_cover(const NilManifold& n, const Z2Char& phi);

struct CoverCheck {
    AbelianGroup kernel_h1;  ///< abelianized Reidemeister-Schreier presentation
    AbelianGroup claimed_h1; ///< H1 of the claimed cover
    bool homology_matches = false;
    Rational base_euler;
    Rational claimed_euler;
    bool euler_matches = false;
    bool ok() const { return homology_matches && euler_matches; }
};

/// Independent evidence that `claimed` is the cover: H1(ker phi) computed by
/// Reidemeister-Schreier must be isomorphic to H1(claimed), and
/// e(claimed) = 2 e(n) if phi(h) = 0, e(n) / 2 if phi(h) = 1.
CoverCheck check_cover(const NilManifold& n, const Z2Char& phi, const NilManifold& claimed);
bool verify_cover(const NilManifold& n, const Z2Char& phi, const NilManifold& claimed);

/// All (base, phi class) whose double cover is m, one descriptor per class,
/// sorted by base encoding then representative.
std::vector<CoveringDescriptor> quotients_of(const NilManifold& m);

/// Every double covering of n, one per equivalence class, with its index.
std::vector<CoveringDescriptor> coverings_of(const NilManifold& n);

/// Bases n with e(n) equal to `target` (every family and parameter option,
/// b >= b_min).
std::vector<NilManifold> manifolds_with_euler(const Rational& target);

} // namespace nilbu
