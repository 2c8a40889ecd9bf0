#include "nilbu/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace nilbu {

GroupWord::GroupWord(std::initializer_list<Letter> letters) {
    for (const auto& l : letters)
        append(l);
}

void GroupWord::append(Letter letter) {
    if (!letters_.empty() && letters_.back().gen == letter.gen &&
        letters_.back().inverse != letter.inverse)
        letters_.pop_back();
    else
        letters_.push_back(letter);
}

void GroupWord::append(std::size_t gen, Int power) {
    const Letter l{gen, power < 0};
    for (Int k = arith::abs(power); k > 0; --k)
        append(l);
}

void GroupWord::append(const GroupWord& other) {
    for (const auto& l : other.letters_)
        append(l);
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.append(Letter{it->gen, !it->inverse});
    return out;
}

GroupWord commutator(std::size_t x, std::size_t y) {
    return {{x, false}, {y, false}, {x, true}, {y, true}};
}

std::size_t FinitePresentation::generator_index(std::string_view name) const {
    const auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end())
        throw Error("unknown generator '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - generators.begin());
}

std::string to_string(const GroupWord& word, const std::vector<std::string>& names) {
    if (word.empty())
        return "1";
    std::ostringstream os;
    const auto& ls = word.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i])
            ++j;
        const auto run = static_cast<Int>(j - i);
        if (i > 0)
            os << ' ';
        os << names.at(ls[i].gen);
        if (ls[i].inverse)
            os << "^-" << run;
        else if (run > 1)
            os << '^' << run;
        i = j;
    }
    return os.str();
}

std::string to_string(const FinitePresentation& pres) {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < pres.generators.size(); ++i)
        os << (i ? "," : "") << pres.generators[i];
    os << " | ";
    for (std::size_t i = 0; i < pres.relators.size(); ++i)
        os << (i ? ", " : "") << to_string(pres.relators[i], pres.generators);
    os << '>';
    return os.str();
}

std::vector<Int> exponent_sums(const GroupWord& word, std::size_t generator_count) {
    std::vector<Int> sums(generator_count, 0);
    for (const auto& l : word.letters())
        sums.at(l.gen) += l.inverse ? -1 : 1;
    return sums;
}

FinitePresentation fundamental_group(const SeifertInvariant& inv) {
    FinitePresentation pres;
    const std::size_t n = inv.n();
    const auto gp = static_cast<std::size_t>(inv.g_prime());
    for (std::size_t i = 0; i < n; ++i)
        pres.generators.push_back("s" + std::to_string(i + 1));
    for (std::size_t j = 0; j < gp; ++j)
        pres.generators.push_back("v" + std::to_string(j + 1));
    pres.generators.push_back("h");
    const std::size_t h = n + gp;
    auto s = [](std::size_t i) { return i; };
    auto v = [n](std::size_t j) { return n + j; };

    for (std::size_t i = 0; i < n; ++i)
        pres.relators.push_back(commutator(s(i), h));
    for (std::size_t i = 0; i < n; ++i) {
        GroupWord w;
        w.append(s(i), inv.pairs()[i].a);
        w.append(h, inv.pairs()[i].beta);
        pres.relators.push_back(w);
    }
    for (std::size_t j = 0; j < gp; ++j) {
        GroupWord w{{v(j), false}, {h, false}, {v(j), true}};
        w.append(h, -inv.epsilon_sign());
        pres.relators.push_back(w);
    }
    GroupWord last;
    for (std::size_t i = 0; i < n; ++i)
        last.append(s(i));
    if (inv.epsilon() == BaseOrientation::Orientable) {
        for (std::size_t j = 0; j + 1 < gp; j += 2)
            last.append(commutator(v(j), v(j + 1)));
    } else {
        for (std::size_t j = 0; j < gp; ++j)
            last.append(v(j), 2);
    }
    last.append(h, arith::neg(inv.b()));
    pres.relators.push_back(last);
    return pres;
}

int evaluate_mod2(const GroupWord& word, std::span<const int> values) {
    int total = 0;
    for (const auto& l : word.letters())
        total ^= values[l.gen] & 1;
    return total;
}

namespace {

void check_character(const FinitePresentation& pres, std::span<const int> phi) {
    if (phi.size() != pres.generators.size())
        throw InvalidCharacter("character has " + std::to_string(phi.size()) +
                               " values for " + std::to_string(pres.generators.size()) +
                               " generators");
    for (int x : phi)
        if (x != 0 && x != 1)
            throw InvalidCharacter("character values must be 0 or 1");
    for (const auto& r : pres.relators)
        if (evaluate_mod2(r, phi) != 0)
            throw NotAHomomorphism("relator " + to_string(r, pres.generators) +
                                   " is not killed by the character");
}

} // namespace

FinitePresentation reidemeister_schreier(const FinitePresentation& pres,
                                         std::span<const int> phi) {
    check_character(pres, phi);
    const auto it = std::find(phi.begin(), phi.end(), 1);
    if (it == phi.end())
        throw NotSurjective("character is identically zero");
    return reidemeister_schreier(pres, phi, static_cast<std::size_t>(it - phi.begin()));
}

FinitePresentation reidemeister_schreier(const FinitePresentation& pres,
                                         std::span<const int> phi, std::size_t transversal) {
    check_character(pres, phi);
    if (std::find(phi.begin(), phi.end(), 1) == phi.end())
        throw NotSurjective("character is identically zero");
    if (transversal >= phi.size() || phi[transversal] != 1)
        throw InvalidCharacter("transversal generator must map to 1");

    const std::size_t count = pres.generators.size();
    // Schreier generator (coset, gen) -> index in the new presentation, or
    // npos for the trivial t_0.
    constexpr auto npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(2 * count, npos);
    FinitePresentation out;
    for (std::size_t coset = 0; coset < 2; ++coset) {
        for (std::size_t g = 0; g < count; ++g) {
            if (coset == 0 && g == transversal)
                continue;
            index[coset * count + g] = out.generators.size();
            out.generators.push_back(pres.generators[g] + "_" + std::to_string(coset));
        }
    }

    auto rewrite = [&](const GroupWord& w, std::size_t coset) {
        GroupWord image;
        for (const auto& l : w.letters()) {
            const auto step = static_cast<std::size_t>(phi[l.gen]);
            if (!l.inverse) {
                const std::size_t k = index[coset * count + l.gen];
                if (k != npos)
                    image.append(Letter{k, false});
                coset ^= step;
            } else {
                // x^-1 read at coset c is gamma(c + phi(x), x)^-1
                coset ^= step;
                const std::size_t k = index[coset * count + l.gen];
                if (k != npos)
                    image.append(Letter{k, true});
            }
        }
        return image;
    };

    for (std::size_t coset = 0; coset < 2; ++coset)
        for (const auto& r : pres.relators)
            out.relators.push_back(rewrite(r, coset));
    return out;
}

} // namespace nilbu
