#pragma once

#include "nilbu/coverings.hpp"
#include "nilbu/seifert.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilbu {

/// Every family, every parameter option, b = b_min .. b_min + span.
std::vector<NilManifold> sweep_manifolds(Int span);

// ---------------------------------------------------------------------------
// Reference data transcribed from the classification tables and theorems.
// Used by `verify` to check the computed results.

struct TableRow {
    Family family;
    std::vector<Int> option;
    Int g_prime = 0;
    int epsilon = 1;
    Int b_min = 0;
    Int c_slope = 0; ///< c = c_slope * b + c_offset
    Int c_offset = 0;
    Int d = 0;
};

std::vector<TableRow> reference_table();

struct ExpectedH1 {
    Int free_rank = 0;
    std::vector<Int> torsion;
    /// Integer combinations of the canonical generators that must vanish.
    std::vector<std::vector<std::pair<std::string, Int>>> relations;
    /// (element, order) pairs that must hold exactly.
    std::vector<std::pair<std::vector<std::pair<std::string, Int>>, Int>> orders;
};

ExpectedH1 reference_h1(const NilManifold& m);

/// Class sizes sorted descending.
std::vector<std::size_t> reference_partition(const NilManifold& m);

struct ExpectedQuotient {
    NilManifold base;
    int index;
};

std::vector<ExpectedQuotient> reference_quotients(const NilManifold& m);

// ---------------------------------------------------------------------------

struct CheckSummary {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures; ///< first few failure messages
    bool ok() const { return failed == 0; }
};

struct VerifyReport {
    std::size_t manifolds = 0;
    std::vector<CheckSummary> checks;
    bool ok() const;
};

/// Runs every cross-check over sweep_manifolds(span). threads = 0 picks the
/// hardware concurrency. The result does not depend on the thread count.
VerifyReport run_verification(Int span, unsigned threads = 0);

} // namespace nilbu
