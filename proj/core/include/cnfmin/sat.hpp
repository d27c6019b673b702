#pragma once

#include <map>
#include <optional>

#include "cnfmin/cnf.hpp"

namespace cnfmin {

/// Truth assignment, total over its declared domain.
class Assignment {
public:
    Assignment() = default;

    void set(VarId v, bool value) { values_[v] = value; }
    std::optional<bool> value(VarId v) const {
        auto it = values_.find(v);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    bool satisfies(Literal l) const {
        auto v = value(l.var());
        return v.has_value() && *v == l.positive();
    }
    bool satisfies(const Clause& c) const {
        for (Literal l : c)
            if (satisfies(l)) return true;
        return false;
    }
    bool satisfies(const Formula& f) const {
        for (const Clause& c : f)
            if (!satisfies(c)) return false;
        return true;
    }

    const std::map<VarId, bool>& values() const { return values_; }

private:
    std::map<VarId, bool> values_;
};

struct SatOptions {
    bool force_general = false; // skip the Horn fast path
};

/// DPLL with unit propagation and pure-literal elimination; branches on the
/// lowest unassigned variable, false first. Horn inputs take a linear
/// unit-propagation path unless force_general is set. The witness is total
/// over the variables of f and deterministic.
std::optional<Assignment> satisfiable(const Formula& f, const SatOptions& options = {});

/// f entails c, decided semantically (f plus the negation of c unsatisfiable).
bool entails(const Formula& f, const Clause& c);

bool equivalent(const Formula& f, const Formula& g);

/// f plus the unit clauses of s is satisfiable.
bool consistent_with(const Formula& f, const LiteralSet& s);

} // namespace cnfmin
