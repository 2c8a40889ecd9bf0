#include "nilbu/epimorphisms.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace nilbu {

std::vector<int> Z2Char::values() const {
    std::vector<int> out(s);
    out.insert(out.end(), v.begin(), v.end());
    out.push_back(h);
    return out;
}

Z2Char Z2Char::from_values(std::span<const int> values, std::size_t n, std::size_t g_prime) {
    if (values.size() != n + g_prime + 1)
        throw InvalidCharacter("expected " + std::to_string(n + g_prime + 1) +
                               " generator values, got " + std::to_string(values.size()));
    Z2Char phi;
    phi.s.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
    phi.v.assign(values.begin() + static_cast<std::ptrdiff_t>(n),
                 values.begin() + static_cast<std::ptrdiff_t>(n + g_prime));
    phi.h = values.back();
    return phi;
}

std::strong_ordering operator<=>(const Z2Char& x, const Z2Char& y) {
    const auto a = x.values();
    const auto b = y.values();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Z2Char& phi) {
    std::ostringstream os;
    auto list = [&os](const std::vector<int>& xs) {
        os << '[';
        for (std::size_t i = 0; i < xs.size(); ++i)
            os << (i ? "," : "") << xs[i];
        os << ']';
    };
    os << "{\"s\":";
    list(phi.s);
    os << ",\"v\":";
    list(phi.v);
    os << ",\"h\":" << phi.h << '}';
    return os.str();
}

void check_epimorphism(const NilManifold& n, const Z2Char& phi) {
    const SeifertInvariant inv = n.expand();
    if (phi.s.size() != inv.n() || phi.v.size() != static_cast<std::size_t>(inv.g_prime()))
        throw InvalidCharacter("character " + to_string(phi) + " does not match the generators of " +
                               to_string(n));
    const auto values = phi.values();
    for (int x : values)
        if (x != 0 && x != 1)
            throw InvalidCharacter("character values must be 0 or 1");
    if (std::find(values.begin(), values.end(), 1) == values.end())
        throw InvalidCharacter("the zero character is not an epimorphism");
    const FinitePresentation pres = fundamental_group(inv);
    for (const auto& r : pres.relators)
        if (evaluate_mod2(r, values) != 0)
            throw InvalidCharacter(to_string(phi) + " does not kill relator " +
                                   to_string(r, pres.generators) + " of " + to_string(n));
}

bool is_epimorphism(const NilManifold& n, const Z2Char& phi) {
    try {
        check_epimorphism(n, phi);
        return true;
    } catch (const InvalidCharacter&) {
        return false;
    }
}

std::vector<Z2Char> enumerate_epis(const NilManifold& n) {
    const SeifertInvariant inv = n.expand();
    const FinitePresentation pres = fundamental_group(inv);
    const std::size_t count = pres.generators.size();
    std::vector<Z2Char> out;
    std::vector<int> values(count);
    // mask bit (count - 1 - k) holds generator k, so increasing masks are lexicographic
    for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
        for (std::size_t k = 0; k < count; ++k)
            values[k] = static_cast<int>((mask >> (count - 1 - k)) & 1U);
        const bool kills_all =
            std::all_of(pres.relators.begin(), pres.relators.end(),
                        [&](const GroupWord& r) { return evaluate_mod2(r, values) == 0; });
        if (kills_all)
            out.push_back(Z2Char::from_values(values, inv.n(),
                                              static_cast<std::size_t>(inv.g_prime())));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool is_single_v(const std::vector<int>& v) {
    return v.size() == 2 && v[0] + v[1] == 1;
}

bool is_double_v(const std::vector<int>& v) {
    return v.size() == 2 && v[0] == 1 && v[1] == 1;
}

[[noreturn]] void not_applicable(const MoveSpec& move, const Z2Char& phi, const NilManifold& n,
                                 const std::string& why) {
    throw MoveNotApplicable(to_string(move) + " on " + to_string(phi) + " over " + to_string(n) +
                            ": " + why);
}

} // namespace

std::string to_string(const MoveSpec& move) {
    return std::visit(
        overloaded{
            [](const FibreTwist& m) {
                std::string out = "fibre-twist(";
                for (std::size_t k = 0; k < m.v_indices.size(); ++k)
                    out += (k ? ",v" : "v") + std::to_string(m.v_indices[k] + 1);
                return out + ")";
            },
            [](const SectionSwap& m) {
                return "section-swap(s" + std::to_string(m.i + 1) + ",s" +
                       std::to_string(m.j + 1) + ")";
            },
            [](const TorusShear& m) {
                return "torus-shear(" + std::to_string(m.target[0]) + "," +
                       std::to_string(m.target[1]) + ")";
            },
            [](const KleinSwap&) { return std::string("klein-swap"); },
            [](const TwoTwoTwist&) { return std::string("22-twist"); },
        },
        move);
}

Z2Char apply_move(const Z2Char& phi, const MoveSpec& move, const NilManifold& n) {
    check_epimorphism(n, phi);
    Z2Char out = phi;
    std::visit(
        overloaded{
            [&](const FibreTwist& m) {
                if (phi.h != 1)
                    not_applicable(move, phi, n, "requires phi(h) = 1");
                if (m.v_indices.empty())
                    not_applicable(move, phi, n, "no v generator selected");
                for (std::size_t j : m.v_indices) {
                    if (j >= out.v.size())
                        not_applicable(move, phi, n, "no such v generator");
                    out.v[j] ^= 1;
                }
            },
            [&](const SectionSwap& m) {
                const auto pairs = n.expand().pairs();
                if (m.i >= pairs.size() || m.j >= pairs.size() || m.i == m.j)
                    not_applicable(move, phi, n, "needs two distinct section generators");
                if (pairs[m.i] != pairs[m.j])
                    not_applicable(move, phi, n, "fibre pairs differ");
                std::swap(out.s[m.i], out.s[m.j]);
            },
            [&](const TorusShear& m) {
                if (n.family() != Family::T)
                    not_applicable(move, phi, n, "class T only");
                const std::vector<int> target{m.target[0], m.target[1]};
                if (is_double_v(phi.v) && is_single_v(target))
                    out.v = target;
                else if (is_single_v(phi.v) && is_double_v(target))
                    out.v = target;
                else
                    not_applicable(move, phi, n, "relates (1,1) with (1,0) or (0,1) only");
            },
            [&](const KleinSwap&) {
                if (n.family() != Family::K)
                    not_applicable(move, phi, n, "class K only");
                if (!is_single_v(phi.v))
                    not_applicable(move, phi, n, "needs (phi(v1), phi(v2)) in {(1,0), (0,1)}");
                std::swap(out.v[0], out.v[1]);
            },
            [&](const TwoTwoTwist&) {
                if (n.family() != Family::F22)
                    not_applicable(move, phi, n, "class 22 only");
                if (phi.s[1] != 1)
                    not_applicable(move, phi, n, "requires phi(s2) = 1");
                out.v[0] ^= 1;
            },
        },
        move);
    return out;
}

std::vector<MoveSpec> applicable_moves(const Z2Char& phi, const NilManifold& n) {
    std::vector<MoveSpec> moves;
    if (phi.h == 1) {
        const std::size_t g = phi.v.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << g); ++mask) {
            FibreTwist t;
            for (std::size_t j = 0; j < g; ++j)
                if (mask >> j & 1U)
                    t.v_indices.push_back(j);
            moves.emplace_back(std::move(t));
        }
    }
    const auto pairs = n.expand().pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i] == pairs[j] && phi.s[i] != phi.s[j])
                moves.emplace_back(SectionSwap{i, j});
    if (n.family() == Family::T) {
        if (is_double_v(phi.v)) {
            moves.emplace_back(TorusShear{{1, 0}});
            moves.emplace_back(TorusShear{{0, 1}});
        } else if (is_single_v(phi.v)) {
            moves.emplace_back(TorusShear{{1, 1}});
        }
    }
    if (n.family() == Family::K && is_single_v(phi.v))
        moves.emplace_back(KleinSwap{});
    if (n.family() == Family::F22 && phi.s[1] == 1)
        moves.emplace_back(TwoTwoTwist{});
    return moves;
}

std::size_t EpiClassPartition::class_of(const Z2Char& phi) const {
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto& m = classes[k].members;
        if (std::binary_search(m.begin(), m.end(), phi))
            return k;
    }
    throw InvalidCharacter(to_string(phi) + " is not an epimorphism of this manifold");
}

std::vector<std::size_t> EpiClassPartition::sizes() const {
    std::vector<std::size_t> out;
    for (const auto& c : classes)
        out.push_back(c.members.size());
    return out;
}

EpiClassPartition equivalence_classes(const NilManifold& n) {
    const auto epis = enumerate_epis(n);
    std::set<Z2Char> seen;
    EpiClassPartition partition;
    for (const auto& start : epis) {
        if (seen.count(start))
            continue;
        std::set<Z2Char> orbit{start};
        std::deque<Z2Char> frontier{start};
        while (!frontier.empty()) {
            const Z2Char phi = frontier.front();
            frontier.pop_front();
            for (const auto& move : applicable_moves(phi, n)) {
                Z2Char next = apply_move(phi, move, n);
                if (orbit.insert(next).second)
                    frontier.push_back(std::move(next));
            }
        }
        seen.insert(orbit.begin(), orbit.end());
        EpiClass cls;
        cls.members.assign(orbit.begin(), orbit.end());
        cls.representative = cls.members.front();
        partition.classes.push_back(std::move(cls));
    }
    std::sort(partition.classes.begin(), partition.classes.end(),
              [](const EpiClass& x, const EpiClass& y) { return x.representative < y.representative; });
    return partition;
}

} // namespace nilbu
