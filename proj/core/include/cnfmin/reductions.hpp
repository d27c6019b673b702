#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cnfmin/cnf.hpp"
#include "cnfmin/forgetting.hpp"
#include "cnfmin/minimize.hpp"

namespace cnfmin {

enum class ReductionKind { horn_conp, horn_np, general_p2, general_s2 };

std::string to_string(ReductionKind kind);

/// Two-block quantified boolean formula. The matrix is a CNF formula or a
/// DNF term list; terms are consistent literal sets.
struct Qbf {
    enum class Order { forall_exists, exists_forall };

    Order order = Order::forall_exists;
    std::set<VarId> universal;
    std::set<VarId> existential;
    std::variant<Formula, std::vector<LiteralSet>> matrix;
};

/// Truth by exhaustive expansion of both blocks.
/// Throws on more than var_cap variables.
bool qbf_eval(const Qbf& q, std::size_t var_cap = 20);

struct ReductionInstance {
    ReductionKind kind = ReductionKind::horn_conp;
    Formula formula;          // the generated formula A
    std::set<VarId> keep;     // X_C
    int bound_k = 0;
    std::variant<Formula, Qbf> source;
    bool source_answer = false; // satisfiability of the CNF or validity of the QBF

    // Named clause families of the construction ("f", "t", "c", "d", "b",
    // "long", "last") and variable groups ("x", "e", "t", "c", "o", "p",
    // "r", "s", "d", "y", "a", "b", "q").
    std::map<std::string, Formula> families;
    std::map<std::string, std::vector<VarId>> var_groups;
};

/// Instance whose forgetting is small exactly when the source CNF is
/// unsatisfiable; bound_k = 2n + 2. The generated formula is Horn.
ReductionInstance build_horn_conp(const Formula& source, VarTable& table);

/// Instance whose forgetting is small exactly when the source CNF is
/// satisfiable; bound_k = 2n + |truth| + |clause| + |bridge| families' sizes.
/// The generated formula is Horn.
ReductionInstance build_horn_np(const Formula& source, VarTable& table);

/// Instance for a forall-exists CNF QBF; bound_k = 2n + 3. An unsatisfiable
/// matrix is first guarded by a fresh universal variable disjoined into every
/// clause, which preserves validity.
ReductionInstance build_general_p2(const Qbf& q, VarTable& table);

/// Instance for an exists-forall DNF QBF;
/// bound_k = 2n + size of the truth, term, and bridge families.
ReductionInstance build_general_s2(const Qbf& q, VarTable& table);

/// The size-k formula the construction designates when the source answer is
/// on the cheap side. Throws std::invalid_argument on the other side.
Formula easy_branch_candidate(const ReductionInstance& instance);

/// Whether the cheap side of the instance is source_answer == true.
bool easy_branch_answer(ReductionKind kind);

struct VerifyOptions {
    bool hard_branch = false; // exhaustive bounded size search, desk scale only
    ForgetOptions forget{};
    MinimizeOptions minimize{};
};

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.pass && !c.skipped) return false;
        return true;
    }
};

/// Runs, as applicable to the kind: (1) the generated formula has only
/// superirredundant clauses, hence is minimal; (2) on the cheap side, the
/// designated size-k candidate expresses the forgetting; (3) the forced
/// literals are reported necessary; (4) optionally, the bounded exhaustive
/// check of the size threshold.
VerifyReport verify_reduction(const ReductionInstance& instance,
                              const VerifyOptions& options = {});

} // namespace cnfmin
