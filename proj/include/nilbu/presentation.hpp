#pragma once

#include "nilbu/seifert.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nilbu {

/// A generator or its inverse.
struct Letter {
    std::size_t gen = 0;
    bool inverse = false;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the generators of some presentation.
class GroupWord {
public:
    GroupWord() = default;
    GroupWord(std::initializer_list<Letter> letters);

    /// Appends gen^power, cancelling against the tail.
    void append(std::size_t gen, Int power = 1);
    void append(Letter letter);
    void append(const GroupWord& other);

    GroupWord inverse() const;

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const GroupWord&, const GroupWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// x y x^-1 y^-1
GroupWord commutator(std::size_t x, std::size_t y);

struct FinitePresentation {
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;

    std::size_t generator_index(std::string_view name) const;
};

/// Debug format: `<g1,g2 | w1, w2>` with words such as `s1 s2 v1^2 h^-3`.
std::string to_string(const FinitePresentation& pres);
std::string to_string(const GroupWord& word, const std::vector<std::string>& names);

/// Exponent sum of each generator in a word.
std::vector<Int> exponent_sums(const GroupWord& word, std::size_t generator_count);

/// Canonical presentation of pi_1 on generators s_1..s_n, v_1..v_g', h: the
/// commutators [s_i,h], then s_i^a_i h^b_i, then v_j h v_j^-1 h^-eps, then
/// s_1...s_n V h^-b.
FinitePresentation fundamental_group(const SeifertInvariant& inv);

/// Value (0 or 1) of a Z2-valued map on a word, given its values on generators.
int evaluate_mod2(const GroupWord& word, std::span<const int> values);

/// Presentation of the index-2 subgroup ker(phi), phi given by its values on
/// the generators. Transversal {1, t}, t the first generator with phi(t) = 1.
/// Schreier generator `x_k` is r_k x rep(r_k x)^-1 for coset representative
/// r_0 = 1, r_1 = t; the trivial `t_0` is omitted. Every relator is rewritten
/// at both cosets and freely reduced. Throws NotAHomomorphism / NotSurjective.
FinitePresentation reidemeister_schreier(const FinitePresentation& pres,
                                         std::span<const int> phi);

/// Same, with an explicit transversal generator (phi(t) must be 1).
FinitePresentation reidemeister_schreier(const FinitePresentation& pres,
                                         std::span<const int> phi, std::size_t transversal);

} // namespace nilbu
