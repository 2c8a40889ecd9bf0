#pragma once

#include "nilbu/presentation.hpp"
#include "nilbu/seifert.hpp"

#include <array>
#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace nilbu {

/// A homomorphism pi_1(N) -> Z_2 recorded by its values on the canonical
/// generators s_1..s_n, v_1..v_g', h.
struct Z2Char {
    std::vector<int> s;
    std::vector<int> v;
    int h = 0;

    /// Values in generator order (s..., v..., h).
    std::vector<int> values() const;
    static Z2Char from_values(std::span<const int> values, std::size_t n, std::size_t g_prime);

    friend bool operator==(const Z2Char&, const Z2Char&) = default;
    /// Lexicographic in generator order.
    friend std::strong_ordering operator<=>(const Z2Char& x, const Z2Char& y);
};

std::string to_string(const Z2Char& phi); ///< {"s":[..],"v":[..],"h":k}

/// Throws InvalidCharacter unless phi has the right shape for n, is 0/1
/// valued, kills every relator of pi_1(n) and is nonzero.
void check_epimorphism(const NilManifold& n, const Z2Char& phi);
bool is_epimorphism(const NilManifold& n, const Z2Char& phi);

/// All epimorphisms onto Z_2, in lexicographic generator order.
std::vector<Z2Char> enumerate_epis(const NilManifold& n);

// ---------------------------------------------------------------------------
// Equivalence moves. Each realizes an automorphism theta of pi_1(N) with
// phi_2 = phi_1 o theta.

/// theta(v_j) = v_j h for the listed j; toggles phi(v_j). Needs phi(h) = 1.
struct FibreTwist {
    std::vector<std::size_t> v_indices;
    friend bool operator==(const FibreTwist&, const FibreTwist&) = default;
};

/// Transposes phi(s_i), phi(s_j) when (a_i, b_i) = (a_j, b_j).
struct SectionSwap {
    std::size_t i = 0;
    std::size_t j = 0;
    friend bool operator==(const SectionSwap&, const SectionSwap&) = default;
};

/// Class T, fixed phi(h): (phi(v_1), phi(v_2)) moves between (1,1) and
/// `target` in {(1,0), (0,1)}, or from one of those back to (1,1).
struct TorusShear {
    std::array<int, 2> target{};
    friend bool operator==(const TorusShear&, const TorusShear&) = default;
};

/// Class K, fixed phi(h): (1,0) <-> (0,1) on (v_1, v_2).
struct KleinSwap {
    friend bool operator==(const KleinSwap&, const KleinSwap&) = default;
};

/// Class 22, phi(s_2) = 1: toggles phi(v_1).
struct TwoTwoTwist {
    friend bool operator==(const TwoTwoTwist&, const TwoTwoTwist&) = default;
};

using MoveSpec = std::variant<FibreTwist, SectionSwap, TorusShear, KleinSwap, TwoTwoTwist>;

std::string to_string(const MoveSpec& move);

/// Throws MoveNotApplicable when the move's hypotheses fail.
Z2Char apply_move(const Z2Char& phi, const MoveSpec& move, const NilManifold& n);

/// Every move whose hypotheses hold for (phi, n) and that changes phi.
std::vector<MoveSpec> applicable_moves(const Z2Char& phi, const NilManifold& n);

struct EpiClass {
    Z2Char representative; ///< lexicographically smallest member
    std::vector<Z2Char> members; ///< sorted
};

struct EpiClassPartition {
    std::vector<EpiClass> classes; ///< ordered by representative

    /// Index of the class containing phi; throws InvalidCharacter if absent.
    std::size_t class_of(const Z2Char& phi) const;
    std::vector<std::size_t> sizes() const;
};

/// Orbits of enumerate_epis(n) under the closure of all applicable moves.
EpiClassPartition equivalence_classes(const NilManifold& n);

} // namespace nilbu
