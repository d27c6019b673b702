#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cnfmin/reductions.hpp"

namespace cnfmin {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse = 2;
inline constexpr int resource = 3;
inline constexpr int mismatch = 4;
} // namespace exit_code

struct RunConfig {
    std::vector<std::string> tokens;          // inline clause tokens or reduction source
    std::optional<std::string> problem_path;  // problem-file mode

    bool minimal = false;
    std::optional<std::string> forget_names;  // single-letter variable names
    std::optional<std::string> keep_names;
    std::optional<int> bound;

    std::optional<ReductionKind> reduction;
    bool verify = false;

    bool machine = false;                     // line-oriented section<TAB>payload
    std::size_t cap_closure = 100000;
    std::size_t cap_enum = 1u << 20;
};

/// Emits, in order and as applicable: closure, prime implicates, redundant
/// clauses, superredundant clauses, minimal equivalent formulas, the
/// forgetting result with its minimal equivalents and minimum size, and the
/// bound verdict. Problem-file expectations are checked after the report.
/// Returns an exit_code value; every error names its stage on err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Builds the requested reduction instance from the source tokens, prints it
/// as key/value lines, and optionally verifies it.
int run_reduction(const RunConfig& config, std::ostream& out, std::ostream& err);

std::optional<ReductionKind> reduction_kind_from(const std::string& name);

} // namespace cnfmin
