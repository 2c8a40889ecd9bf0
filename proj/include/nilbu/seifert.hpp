#pragma once

#include "nilbu/arith.hpp"
#include "nilbu/rational.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilbu {

using arith::Int;

/// One exceptional fibre (a, beta). Normalized pairs have 0 < beta < a.
struct FibrePair {
    Int a = 0;
    Int beta = 0;
    friend auto operator<=>(const FibrePair&, const FibrePair&) = default;
};

enum class BaseOrientation : int { Orientable = 1, NonOrientable = -1 };

/// Seifert data as typed in by a user: betas are arbitrary and a = 1 pairs
/// are allowed. Only `normalize` turns it into a SeifertInvariant.
struct LooseSeifert {
    Int b = 0;
    BaseOrientation epsilon = BaseOrientation::Orientable;
    Int g_prime = 0;
    std::vector<FibrePair> pairs;
};

/// Normalized invariant (b; eps; g'; {(a_i, b_i)}) of an orientable Seifert
/// manifold. Pairs satisfy 0 < beta < a, gcd(a, beta) = 1 and are kept sorted.
class SeifertInvariant {
public:
    /// Validates the normalized-form invariants; throws InvalidInvariant.
    SeifertInvariant(Int b, BaseOrientation epsilon, Int g_prime, std::vector<FibrePair> pairs);

    Int b() const { return b_; }
    BaseOrientation epsilon() const { return epsilon_; }
    int epsilon_sign() const { return static_cast<int>(epsilon_); }
    Int g_prime() const { return g_prime_; }
    const std::vector<FibrePair>& pairs() const { return pairs_; }
    std::size_t n() const { return pairs_.size(); }

    friend bool operator==(const SeifertInvariant&, const SeifertInvariant&) = default;

private:
    Int b_;
    BaseOrientation epsilon_;
    Int g_prime_;
    std::vector<FibrePair> pairs_;
};

struct CdInvariants {
    Int c = 0;
    Int d = 0;
    Int a = 1;
    friend bool operator==(const CdInvariants&, const CdInvariants&) = default;
};

SeifertInvariant normalize(const LooseSeifert& raw);

Rational orbifold_euler_char(const SeifertInvariant& inv);
Rational euler_number(const SeifertInvariant& inv);
CdInvariants cd_invariants(const SeifertInvariant& inv);

/// Smallest b with b + sum(beta_i / a_i) > 0.
Int b_min(const std::vector<FibrePair>& pairs);

bool is_nil(const SeifertInvariant& inv);

/// b -> -b - n, beta_i -> a_i - beta_i, then renormalized. Negates e.
SeifertInvariant reverse_orientation(const SeifertInvariant& inv);

// ---------------------------------------------------------------------------
// Classified Nil manifolds

enum class Family { T, K, F22, F2222, F236, F244, F333 };

inline constexpr std::array<Family, 7> kAllFamilies = {
    Family::T, Family::K, Family::F22, Family::F2222, Family::F236, Family::F244, Family::F333};

std::string_view family_tag(Family f);
std::optional<Family> family_from_tag(std::string_view tag);

/// Number of free parameters besides b (0, 2 or 3).
std::size_t family_param_count(Family f);

/// Allowed parameter tuples of a family in canonical form (the table rows).
std::vector<std::vector<Int>> family_options(Family f);

/// A manifold of the Nil list: family tag, b and the family parameters
/// (b_2, b_3 for 236 and 244; b_1, b_2, b_3 for 333). 244 and 333 parameters
/// are stored sorted ascending.
class NilManifold {
public:
    /// Canonicalizes the parameters and validates ranges and b >= b_min.
    NilManifold(Family family, Int b, std::vector<Int> params = {});

    static NilManifold T(Int b) { return {Family::T, b}; }
    static NilManifold K(Int b) { return {Family::K, b}; }
    static NilManifold M22(Int b) { return {Family::F22, b}; }
    static NilManifold M2222(Int b) { return {Family::F2222, b}; }
    static NilManifold M236(Int b, Int b2, Int b3) { return {Family::F236, b, {b2, b3}}; }
    static NilManifold M244(Int b, Int b2, Int b3) { return {Family::F244, b, {b2, b3}}; }
    static NilManifold M333(Int b, Int b1, Int b2, Int b3) {
        return {Family::F333, b, {b1, b2, b3}};
    }

    Family family() const { return family_; }
    Int b() const { return b_; }
    const std::vector<Int>& params() const { return params_; }

    /// The Seifert invariant this manifold stands for.
    SeifertInvariant expand() const;

    friend auto operator<=>(const NilManifold&, const NilManifold&) = default;

private:
    Family family_;
    Int b_;
    std::vector<Int> params_;
};

/// Fibre pairs of a family for the given (canonical) parameters.
std::vector<FibrePair> family_pairs(Family f, const std::vector<Int>& params);

/// Requires is_nil and e > 0. Throws NotNilError / OrientationError.
NilManifold classify(const SeifertInvariant& inv);

// ---------------------------------------------------------------------------
// Text encodings: SF(b; eps; g'; (a1,b1)(a2,b2)...) and T(b), 236(b;b2,b3), ...

std::string to_string(const SeifertInvariant& inv);
std::string to_string(const NilManifold& m);

LooseSeifert parse_loose_seifert(std::string_view text);
NilManifold parse_family(std::string_view text);

/// Accepts either encoding. SF(...) input is normalized and classified.
NilManifold parse_manifold(std::string_view text);

} // namespace nilbu
