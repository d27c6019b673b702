#include "cnfmin/minimize.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "cnfmin/errors.hpp"
#include "cnfmin/redundancy.hpp"
#include "cnfmin/sat.hpp"

namespace cnfmin {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();

struct Search {
    const Formula& input;
    std::vector<Clause> optional;
    int limit; // inclusive size cap for candidates
    bool all_witnesses;

    int best = kUnbounded;
    std::set<Formula> witnesses;
    SearchStats stats;

    std::vector<Clause> chosen;
    int chosen_size = 0;

    // Candidates are subsets of the prime implicates, so the input entails
    // them; equivalence reduces to the candidate entailing every input clause.
    bool candidate_equivalent(const Formula& candidate) {
        ++stats.candidates;
        for (const Clause& c : input)
            if (!entails(candidate, c)) return false;
        return true;
    }

    void explore(std::size_t from, const Formula& forced, int forced_size) {
        ++stats.nodes;
        int current = forced_size + chosen_size;
        int cap = std::min(best, limit);
        if (current > cap) return;

        Formula candidate = forced;
        for (const Clause& c : chosen) candidate = candidate.with(c);
        if (candidate_equivalent(candidate)) {
            if (current < best) {
                best = current;
                witnesses.clear();
            }
            if (current == best && (all_witnesses || witnesses.empty()))
                witnesses.insert(candidate);
            return; // extensions cannot be smaller
        }

        for (std::size_t i = from; i < optional.size(); ++i) {
            int extra = static_cast<int>(optional[i].size());
            if (current + extra > std::min(best, limit)) continue;
            chosen.push_back(optional[i]);
            chosen_size += extra;
            explore(i + 1, forced, forced_size);
            chosen_size -= extra;
            chosen.pop_back();
        }
    }
};

std::optional<MinimizationResult> run_search(const Formula& f, int limit,
                                             const MinimizeOptions& options) {
    ClosureResult cr = resolution_closure(f, options.closure);
    Formula forced = superirredundant_clauses(f, options.closure);

    std::vector<Clause> optional;
    for (const Clause& c : cr.prime)
        if (!forced.contains(c)) optional.push_back(c);
    std::stable_sort(optional.begin(), optional.end(),
                     [](const Clause& a, const Clause& b) { return a.size() < b.size(); });

    if (optional.size() > options.max_optional)
        throw resource_limit_error(
            "minimization candidate pool of " + std::to_string(optional.size()) +
            " exceeds cap " + std::to_string(options.max_optional) +
            "; bracket lower=" + std::to_string(size(forced)) +
            " upper=" + std::to_string(size(cr.prime)));

    Search search{f, std::move(optional), limit, options.all_witnesses};
    search.explore(0, forced, size(forced));

    if (search.best == kUnbounded) return std::nullopt;

    MinimizationResult result;
    result.min_size = search.best;
    result.witnesses.assign(search.witnesses.begin(), search.witnesses.end());
    result.forced_clauses = forced;
    result.stats = search.stats;
    return result;
}

} // namespace

MinimizationResult minimize(const Formula& f, const MinimizeOptions& options) {
    auto result = run_search(f, kUnbounded, options);
    // The prime implicates themselves are an equivalent candidate, so the
    // unbounded search always finds a witness.
    return *result;
}

std::optional<MinimizationResult> minimize_within(const Formula& f, int bound,
                                                  const MinimizeOptions& options) {
    return run_search(f, bound, options);
}

bool is_minimal(const Formula& f, const MinimizeOptions& options) {
    if (superirredundant_clauses(f, options.closure) == f) return true;
    return minimize(f, options).min_size == size(f);
}

} // namespace cnfmin
