#include "cnfmin/cnf.hpp"

#include <algorithm>
#include <numeric>

namespace cnfmin {

namespace {

void sort_unique(std::vector<Literal>& lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

bool has_clash(const std::vector<Literal>& sorted) {
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1].var() == sorted[i].var()) return true;
    return false;
}

} // namespace

Clause::Clause(std::vector<Literal> literals) : lits_(std::move(literals)) {
    sort_unique(lits_);
    if (has_clash(lits_)) throw tautology_error("tautological clause");
}

std::optional<Clause> Clause::try_make(std::vector<Literal> literals) {
    sort_unique(literals);
    if (has_clash(literals)) return std::nullopt;
    Clause c;
    c.lits_ = std::move(literals);
    return c;
}

bool Clause::contains(Literal l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::mentions(VarId v) const {
    return contains(Literal(v, true)) || contains(Literal(v, false));
}

bool Clause::subset_of(const Clause& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

bool Clause::strict_subset_of(const Clause& other) const {
    return lits_.size() < other.lits_.size() && subset_of(other);
}

Clause Clause::with(Literal l) const {
    std::vector<Literal> lits = lits_;
    lits.push_back(l);
    return Clause(std::move(lits));
}

Clause Clause::without(Literal l) const {
    Clause c = *this;
    auto it = std::lower_bound(c.lits_.begin(), c.lits_.end(), l);
    if (it != c.lits_.end() && *it == l) c.lits_.erase(it);
    return c;
}

Formula::Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool Formula::contains(const Clause& c) const {
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

Formula Formula::with(const Clause& c) const {
    Formula f = *this;
    auto it = std::lower_bound(f.clauses_.begin(), f.clauses_.end(), c);
    if (it == f.clauses_.end() || *it != c) f.clauses_.insert(it, c);
    return f;
}

Formula Formula::without(const Clause& c) const {
    Formula f = *this;
    auto it = std::lower_bound(f.clauses_.begin(), f.clauses_.end(), c);
    if (it != f.clauses_.end() && *it == c) f.clauses_.erase(it);
    return f;
}

Formula Formula::united(const Formula& other) const {
    std::vector<Clause> all = clauses_;
    all.insert(all.end(), other.clauses_.begin(), other.clauses_.end());
    return Formula(std::move(all));
}

LiteralSet::LiteralSet(std::vector<Literal> literals) : lits_(std::move(literals)) {
    sort_unique(lits_);
    if (has_clash(lits_)) throw inconsistent_literals("inconsistent literal set");
}

bool LiteralSet::contains(Literal l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

LiteralSet LiteralSet::with(Literal l) const {
    std::vector<Literal> lits = lits_;
    lits.push_back(l);
    return LiteralSet(std::move(lits));
}

LiteralSet LiteralSet::flipped(Literal l) const {
    if (!contains(l)) throw error("flipped: literal not in set");
    std::vector<Literal> lits;
    lits.reserve(lits_.size());
    for (Literal x : lits_) lits.push_back(x == l ? l.negated() : x);
    return LiteralSet(std::move(lits));
}

Formula LiteralSet::as_units() const {
    std::vector<Clause> units;
    units.reserve(lits_.size());
    for (Literal l : lits_) units.push_back(Clause({l}));
    return Formula(std::move(units));
}

int size(const Formula& f) {
    return std::accumulate(f.begin(), f.end(), 0, [](int acc, const Clause& c) {
        return acc + static_cast<int>(c.size());
    });
}

Formula clauses_with_literal(const Formula& f, Literal l) {
    std::vector<Clause> out;
    for (const Clause& c : f)
        if (c.contains(l)) out.push_back(c);
    return Formula(std::move(out));
}

Formula substitute(const Formula& f, VarId x, bool value) {
    Literal satisfied(x, value);
    Literal falsified = satisfied.negated();
    std::vector<Clause> out;
    for (const Clause& c : f) {
        if (c.contains(satisfied)) continue;
        out.push_back(c.without(falsified));
    }
    return Formula(std::move(out));
}

std::vector<VarId> variables(const Clause& c) {
    std::vector<VarId> vars;
    vars.reserve(c.size());
    for (Literal l : c) vars.push_back(l.var());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::vector<VarId> variables(const Formula& f) {
    std::vector<VarId> vars;
    for (const Clause& c : f)
        for (Literal l : c) vars.push_back(l.var());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool occurs(const Formula& f, Literal l) {
    for (const Clause& c : f)
        if (c.contains(l)) return true;
    return false;
}

bool is_horn(const Formula& f) {
    for (const Clause& c : f) {
        int positives = 0;
        for (Literal l : c)
            if (l.positive() && ++positives > 1) return false;
    }
    return true;
}

VarId VarTable::intern(std::string_view name) {
    if (name.empty()) throw error("variable name must be non-empty");
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    VarId id(count());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<VarId> VarTable::find(std::string_view name) const {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    return std::nullopt;
}

const std::string& VarTable::name(VarId v) const {
    if (v.value() < 0 || v.value() >= count()) throw error("unknown variable id");
    return names_[static_cast<std::size_t>(v.value())];
}

VarId VarTable::fresh(std::string_view base) {
    std::string candidate(base);
    while (index_.count(candidate)) candidate += '\'';
    return intern(candidate);
}

VarId VarTable::fresh_indexed(std::string_view prefix) {
    for (int i = 1;; ++i) {
        std::string candidate = std::string(prefix) + std::to_string(i);
        if (!index_.count(candidate)) return intern(candidate);
    }
}

} // namespace cnfmin
