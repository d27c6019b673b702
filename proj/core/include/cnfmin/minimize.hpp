#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cnfmin/cnf.hpp"
#include "cnfmin/resolution.hpp"

namespace cnfmin {

struct SearchStats {
    std::uint64_t nodes = 0;      // search tree nodes explored
    std::uint64_t candidates = 0; // equivalence tests performed
};

struct MinimizationResult {
    int min_size = 0;
    std::vector<Formula> witnesses; // all minimum-size equivalent formulas
    Formula forced_clauses;         // superirredundant clauses of the input
    SearchStats stats;
};

struct MinimizeOptions {
    std::size_t max_optional = 24; // candidate prime implicates beyond the forced ones
    bool all_witnesses = true;     // false keeps only the first witness per size
    ClosureOptions closure{};
};

/// Least size over all formulas equivalent to f, with every minimum-size
/// witness. Witnesses are subsets of the prime implicates of f that contain
/// every superirredundant clause of f. Branch and bound, candidates ordered
/// by size then canonically.
MinimizationResult minimize(const Formula& f, const MinimizeOptions& options = {});

/// Like minimize but only considers candidates of size <= bound; nothing
/// within the bound yields nullopt.
std::optional<MinimizationResult> minimize_within(const Formula& f, int bound,
                                                  const MinimizeOptions& options = {});

/// size(f) attains the minimum over equivalent formulas. Returns immediately
/// when every clause of f is superirredundant.
bool is_minimal(const Formula& f, const MinimizeOptions& options = {});

} // namespace cnfmin
