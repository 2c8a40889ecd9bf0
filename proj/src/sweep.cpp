#include "nilbu/sweep.hpp"

#include "nilbu/bu_index.hpp"
#include "nilbu/homology.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <thread>

namespace nilbu {

using namespace arith;

std::vector<NilManifold> sweep_manifolds(Int span) {
    std::vector<NilManifold> out;
    for (Family f : kAllFamilies)
        for (const auto& option : family_options(f)) {
            const Int lowest = b_min(family_pairs(f, option));
            for (Int b = lowest; b <= add(lowest, span); ++b)
                out.emplace_back(f, b, option);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Reference data

std::vector<TableRow> reference_table() {
    using F = Family;
    return {
        {F::T, {}, 2, +1, 1, 1, 0, 0},
        {F::K, {}, 2, -1, 1, 1, 0, 0},
        {F::F22, {}, 1, -1, 0, 2, 2, 2},
        {F::F2222, {}, 0, +1, -1, 2, 4, 4},
        {F::F236, {1, 1}, 0, +1, 0, 6, 6, 2},
        {F::F236, {1, 5}, 0, +1, -1, 6, 10, 2},
        {F::F236, {2, 1}, 0, +1, -1, 6, 8, 2},
        {F::F236, {2, 5}, 0, +1, -1, 6, 12, 2},
        {F::F244, {1, 1}, 0, +1, 0, 4, 4, 3},
        {F::F244, {1, 3}, 0, +1, -1, 4, 6, 3},
        {F::F244, {3, 3}, 0, +1, -1, 4, 8, 3},
        {F::F333, {1, 1, 1}, 0, +1, 0, 3, 3, 0},
        {F::F333, {1, 1, 2}, 0, +1, -1, 3, 4, 0},
        {F::F333, {1, 2, 2}, 0, +1, -1, 3, 5, 0},
        {F::F333, {2, 2, 2}, 0, +1, -1, 3, 6, 0},
    };
}

namespace {

using Terms = std::vector<std::pair<std::string, Int>>;

std::vector<Int> chain(std::vector<Int> factors) {
    // factors here are already a divisibility chain; drop the trivial ones
    factors.erase(std::remove(factors.begin(), factors.end(), Int{1}), factors.end());
    return factors;
}

} // namespace

ExpectedH1 reference_h1(const NilManifold& m) {
    const Int b = m.b();
    const auto& p = m.params();
    ExpectedH1 out;
    switch (m.family()) {
    case Family::T:
        out.free_rank = 2;
        out.torsion = chain({b});
        out.relations = {{{"h", b}}};
        out.orders = {{{{"h", 1}}, b}, {{{"v1", 1}}, 0}, {{{"v2", 1}}, 0}};
        break;
    case Family::K:
        out.free_rank = 1;
        if (b % 2 != 0) {
            out.torsion = {4};
            out.relations = {{{"h", 1}, {"v1", -2}, {"v2", -2}}};
            out.orders = {{{{"v1", 1}, {"v2", 1}}, 4}, {{{"v1", 1}}, 0}};
        } else {
            out.torsion = {2, 2};
            out.orders = {{{{"v1", 1}, {"v2", 1}}, 2}, {{{"h", 1}}, 2}, {{{"v1", 1}}, 0}};
        }
        break;
    case Family::F22:
        out.torsion = {4, 4};
        out.relations = {{{"h", 1}, {"s1", 2}},
                         {{"s2", 1}, {"s1", add(mul(2, b), 1)}, {"v1", 2}}};
        out.orders = {{{{"v1", 1}}, 4}, {{{"s1", 1}}, 4}};
        break;
    case Family::F2222: {
        const Int c = add(mul(2, b), 4);
        out.torsion = {2, 2, mul(2, c)};
        out.relations = {{{"h", 1}, {"s1", 2}},
                         {{"s4", 1}, {"s1", add(mul(2, b), 1)}, {"s2", 1}, {"s3", 1}}};
        out.orders = {{{{"s2", 1}, {"s1", -1}}, 2},
                      {{{"s3", 1}, {"s1", -1}}, 2},
                      {{{"s1", 1}}, mul(2, c)}};
        break;
    }
    case Family::F236: {
        const Int c = add(add(mul(6, b), 3), add(mul(2, p[0]), p[1]));
        out.torsion = {mul(6, c)};
        // s1 = 3(2 b2 - 3)(s2 - s1)
        const Int k = 3 * (2 * p[0] - 3);
        out.relations = {{{"s1", add(1, k)}, {"s2", neg(k)}},
                         {{"h", 1}, {"s1", 2}},
                         {{"s3", 1}, {"s1", add(mul(2, b), 1)}, {"s2", 1}}};
        out.orders = {{{{"s2", 1}, {"s1", -1}}, mul(6, c)}};
        break;
    }
    case Family::F244: {
        const Int c = add(add(mul(4, b), 2), add(p[0], p[1]));
        out.torsion = {2, mul(4, c)};
        // s1 = (1, 2 b2 - 4) and s2 - s1 = (0, 1), so 2 s1 = (4 b2 - 8)(s2 - s1)
        const Int k = 4 * p[0] - 8;
        out.relations = {{{"s1", add(2, k)}, {"s2", neg(k)}},
                         {{"h", 1}, {"s1", 2}},
                         {{"s3", 1}, {"s1", add(mul(2, b), 1)}, {"s2", 1}}};
        out.orders = {{{{"s2", 1}, {"s1", -1}}, mul(4, c)}};
        break;
    }
    case Family::F333: {
        const Int c = add(mul(3, b), add(add(p[0], p[1]), p[2]));
        out.torsion = chain({3, mul(3, c)});
        // h = (0,3), s1 = (0,-b1): b1 h + 3 s1 = 0; s3 = b h - s1 - s2
        out.relations = {{{"h", p[0]}, {"s1", 3}},
                         {{"s3", 1}, {"h", neg(b)}, {"s1", 1}, {"s2", 1}}};
        out.orders = {{{{"h", 1}}, c}};
        break;
    }
    }
    return out;
}

std::vector<std::size_t> reference_partition(const NilManifold& m) {
    const Int b = m.b();
    const auto& p = m.params();
    switch (m.family()) {
    case Family::T: return b % 2 != 0 ? std::vector<std::size_t>{3} : std::vector<std::size_t>{4, 3};
    case Family::K:
        return b % 2 != 0 ? std::vector<std::size_t>{2, 1} : std::vector<std::size_t>{4, 2, 1};
    case Family::F22: return {2, 1};
    case Family::F2222: return {6, 1};
    case Family::F236: return {1};
    case Family::F244: return p[0] == p[1] ? std::vector<std::size_t>{2, 1} : std::vector<std::size_t>{1, 1, 1};
    case Family::F333:
        return mod(add(b, add(add(p[0], p[1]), p[2])), 2) == 0 ? std::vector<std::size_t>{1}
                                                                : std::vector<std::size_t>{};
    }
    return {};
}

std::vector<ExpectedQuotient> reference_quotients(const NilManifold& m) {
    const Int b = m.b();
    const auto& p = m.params();
    const bool odd = mod(b, 2) == 1;
    using N = NilManifold;
    switch (m.family()) {
    case Family::T:
        if (odd)
            return {{N::T(2 * b), 3}};
        return {{N::T(2 * b), 2}, {N::T(b / 2), 1}, {N::M2222(b / 2 - 2), 2}, {N::K(b / 2), 1}};
    case Family::K:
        if (odd)
            return {{N::K(2 * b), 3}};
        return {{N::K(2 * b), 2}, {N::K(b / 2), 2}, {N::M22(b / 2 - 1), 2}};
    case Family::F22:
    case Family::F236: return {};
    case Family::F2222:
        if (odd)
            return {{N::M244((b - 1) / 2, 1, 3), 2}};
        return {{N::M2222(b / 2 - 1), 2},
                {N::M22(b / 2), 2},
                {N::M244(b / 2 - 1, 3, 3), 2},
                {N::M244(b / 2, 1, 1), 2}};
    case Family::F244: {
        if (p[0] != p[1])
            return {};
        const Int x = p[0];
        if (odd)
            return {{N::M244((b - 1) / 2, 1, x), 3}};
        return {{N::M244(b / 2 - 1, x, 3), 3}};
    }
    case Family::F333: {
        // canonical triples written as (x, x, y) up to reordering
        Int x = 0, y = 0;
        if (p == std::vector<Int>{1, 1, 1}) { x = 1; y = 1; }
        else if (p == std::vector<Int>{1, 1, 2}) { x = 1; y = 2; }
        else if (p == std::vector<Int>{1, 2, 2}) { x = 2; y = 1; }
        else { x = 2; y = 2; }
        const N via333 = N::M333(2 * b + 2 * x + y - 3, 3 - y, 3 - x, 3 - x);
        if (mod(b - y, 2) == 1)
            return {{via333, 3}};
        return {{via333, 2}, {N::M236((b - y) / 2, x, 4 * y - 3), 2}};
    }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Verification sweep

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.ok(); });
}

namespace {

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "table",     "homology", "epimorphisms", "partitions", "covers",
        "oracle",    "index",    "theorems",     "round-trip", "separation",
        "errors",
    };
    return names;
}

struct Findings {
    // per check: (passed, failure messages)
    std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> by_check;

    void record(const std::string& check, bool ok, const std::function<std::string()>& why) {
        auto& slot = by_check[check];
        if (ok)
            ++slot.first;
        else
            slot.second.push_back(why());
    }
};

std::string terms_to_string(const Terms& terms) {
    std::string out;
    for (const auto& [name, k] : terms) {
        if (!out.empty())
            out += " + ";
        out += std::to_string(k) + name;
    }
    return out;
}

bool same_quotients(std::vector<std::pair<std::string, int>> got,
                    std::vector<std::pair<std::string, int>> want) {
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

void check_manifold(const NilManifold& m, Findings& f) {
    const std::string name = to_string(m);
    const SeifertInvariant inv = m.expand();

    // table
    {
        const CdInvariants cd = cd_invariants(inv);
        const auto rows = reference_table();
        const auto row = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) {
            return r.family == m.family() && r.option == m.params();
        });
        const bool ok = row != rows.end() && cd.c == add(mul(row->c_slope, m.b()), row->c_offset) &&
                        cd.d == row->d && b_min(inv.pairs()) == row->b_min &&
                        inv.g_prime() == row->g_prime && inv.epsilon_sign() == row->epsilon &&
                        orbifold_euler_char(inv) == Rational(0) &&
                        euler_number(inv) > Rational(0) && classify(inv) == m;
        f.record("table", ok, [&] {
            return name + ": c = " + std::to_string(cd.c) + ", d = " + std::to_string(cd.d);
        });
    }

    // homology
    const AbelianGroup g = h1(m);
    {
        const ExpectedH1 want = reference_h1(m);
        f.record("homology", g.free_rank == want.free_rank && g.torsion == want.torsion, [&] {
            return name + ": H1 = " + describe(g);
        });
        const Int expected_free =
            inv.epsilon() == BaseOrientation::Orientable ? inv.g_prime() : inv.g_prime() - 1;
        f.record("homology", g.free_rank == expected_free,
                 [&] { return name + ": free rank " + std::to_string(g.free_rank); });
        for (const auto& rel : want.relations)
            f.record("homology", g.is_zero(g.element(rel)),
                     [&] { return name + ": relation " + terms_to_string(rel) + " != 0"; });
        for (const auto& [elt, ord] : want.orders)
            f.record("homology", g.order(g.element(elt)) == ord, [&] {
                return name + ": order of " + terms_to_string(elt) + " is " +
                       std::to_string(g.order(g.element(elt))) + ", expected " + std::to_string(ord);
            });
    }

    // epimorphisms and partitions
    const auto epis = enumerate_epis(m);
    const auto partition = equivalence_classes(m);
    {
        const Int rank = mod2_rank(g);
        f.record("epimorphisms", static_cast<Int>(epis.size()) == (Int{1} << rank) - 1, [&] {
            return name + ": " + std::to_string(epis.size()) + " epimorphisms, mod-2 rank " +
                   std::to_string(rank);
        });
        for (const auto& phi : epis) {
            f.record("epimorphisms", is_epimorphism(m, phi),
                     [&] { return name + ": " + to_string(phi) + " kills not every relator"; });
            for (const auto& move : applicable_moves(phi, m)) {
                const Z2Char moved = apply_move(phi, move, m);
                f.record("epimorphisms", is_epimorphism(m, moved), [&] {
                    return name + ": " + to_string(move) + " leaves the epimorphisms";
                });
            }
        }
        auto sizes = partition.sizes();
        std::sort(sizes.rbegin(), sizes.rend());
        f.record("partitions", sizes == reference_partition(m), [&] {
            std::string s;
            for (auto k : sizes)
                s += std::to_string(k) + " ";
            return name + ": class sizes " + s;
        });
    }

    // covers, oracle, index
    std::vector<std::pair<std::string, int>> class_outcomes;
    for (const auto& cls : partition.classes) {
        const NilManifold cover = double_cover(m, cls.representative);
        const int index = z2_index(m, cls.representative);
        class_outcomes.emplace_back(to_string(cover), index);
        for (const auto& phi : cls.members) {
            const NilManifold member_cover = double_cover(m, phi);
            const SeifertInvariant ci = member_cover.expand();
            const Rational e = euler_number(inv);
            const Rational expected_e = phi.h == 0 ? e * Rational(2) : e / Rational(2);
            f.record("covers",
                     member_cover == cover && is_nil(ci) && euler_number(ci) > Rational(0) &&
                         euler_number(ci) == expected_e,
                     [&] { return name + ": cover of " + to_string(phi) + " is " + to_string(member_cover); });

            const CoverCheck check = check_cover(m, phi, member_cover);
            f.record("oracle", check.ok(), [&] {
                return name + ", " + to_string(phi) + ": kernel H1 " + describe(check.kernel_h1) +
                       " vs " + to_string(member_cover) + " H1 " + describe(check.claimed_h1);
            });

            const bool one = index_is_one(m, phi);
            const bool three = cup_cube_nonzero(m, phi);
            f.record("index", one == index_one_listing(m, phi).has_value(), [&] {
                return name + ", " + to_string(phi) + ": torsion criterion disagrees with listing";
            });
            f.record("index", three == index_three_listing(m, phi).has_value(), [&] {
                return name + ", " + to_string(phi) + ": cup-cube criterion disagrees with listing";
            });
            f.record("index", !(one && three), [&] {
                return name + ", " + to_string(phi) + ": index 1 and 3 at once";
            });
            f.record("index", z2_index(m, phi) == index, [&] {
                return name + ", " + to_string(phi) + ": index not constant on its class";
            });
        }

        const auto back = quotients_of(cover);
        const bool found = std::any_of(back.begin(), back.end(), [&](const CoveringDescriptor& d) {
            return d.base == m && d.phi == cls.representative && d.index == index;
        });
        f.record("round-trip", found, [&] {
            return name + ": " + to_string(cover) + " does not list it as a quotient";
        });
    }
    {
        auto sorted = class_outcomes;
        std::sort(sorted.begin(), sorted.end());
        const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        f.record("separation", distinct, [&] {
            return name + ": two classes share cover and index";
        });
    }

    // theorems
    {
        std::vector<std::pair<std::string, int>> got, want;
        for (const auto& d : quotients_of(m))
            got.emplace_back(to_string(d.base), d.index);
        for (const auto& q : reference_quotients(m))
            want.emplace_back(to_string(q.base), q.index);
        f.record("theorems", same_quotients(got, want), [&] {
            std::string s = name + ": quotients";
            for (const auto& [base, k] : got)
                s += " " + base + "[" + std::to_string(k) + "]";
            return s;
        });
    }
}

} // namespace

VerifyReport run_verification(Int span, unsigned threads) {
    const auto manifolds = sweep_manifolds(span);
    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, manifolds.size())));

    std::vector<Findings> findings(manifolds.size());
    auto worker = [&](std::size_t start) {
        for (std::size_t i = start; i < manifolds.size(); i += threads) {
            try {
                check_manifold(manifolds[i], findings[i]);
            } catch (const std::exception& e) {
                findings[i].record("errors", false, [&] {
                    return to_string(manifolds[i]) + ": exception " + e.what();
                });
            }
        }
    };
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t)
        jobs.push_back(std::async(std::launch::async, worker, t));
    for (auto& j : jobs)
        j.get();

    VerifyReport report;
    report.manifolds = manifolds.size();
    for (const auto& check : check_names()) {
        CheckSummary summary;
        summary.name = check;
        for (const auto& f : findings) {
            const auto it = f.by_check.find(check);
            if (it == f.by_check.end())
                continue;
            summary.passed += it->second.first;
            summary.failed += it->second.second.size();
            for (const auto& msg : it->second.second)
                if (summary.failures.size() < 10)
                    summary.failures.push_back(msg);
        }
        report.checks.push_back(std::move(summary));
    }
    return report;
}

} // namespace nilbu
