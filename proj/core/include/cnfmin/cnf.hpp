#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnfmin/errors.hpp"

namespace cnfmin {

/// Interned variable identifier. Display names live in a VarTable.
class VarId {
public:
    explicit constexpr VarId(int value) : value_(value) {}

    constexpr int value() const { return value_; }

    friend constexpr auto operator<=>(VarId, VarId) = default;

private:
    int value_;
};

/// A variable or its negation.
class Literal {
public:
    Literal(VarId var, bool positive) : code_(var.value() * 2 + (positive ? 0 : 1)) {}

    VarId var() const { return VarId(code_ / 2); }
    bool positive() const { return (code_ & 1) == 0; }
    Literal negated() const { Literal l = *this; l.code_ ^= 1; return l; }

    friend constexpr auto operator<=>(Literal, Literal) = default;

private:
    int code_;
};

/// A tautology-free set of literals. Equality is set equality.
class Clause {
public:
    Clause() = default;

    /// Sorts, removes duplicates, and rejects tautologies.
    explicit Clause(std::vector<Literal> literals);

    /// Like the constructor but yields nothing instead of throwing on a tautology.
    static std::optional<Clause> try_make(std::vector<Literal> literals);

    const std::vector<Literal>& literals() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }

    bool contains(Literal l) const;
    bool mentions(VarId v) const;

    bool subset_of(const Clause& other) const;
    bool strict_subset_of(const Clause& other) const;

    /// Clause with l added; throws tautology_error if neg(l) is present.
    Clause with(Literal l) const;
    /// Clause with l removed (no-op if absent).
    Clause without(Literal l) const;

    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    friend auto operator<=>(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> lits_; // sorted, unique
};

/// A set of clauses. Equality is set equality; no tautological members.
class Formula {
public:
    Formula() = default;
    explicit Formula(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t clause_count() const { return clauses_.size(); }
    bool empty() const { return clauses_.empty(); }

    bool contains(const Clause& c) const;

    Formula with(const Clause& c) const;
    Formula without(const Clause& c) const;
    Formula united(const Formula& other) const;

    auto begin() const { return clauses_.begin(); }
    auto end() const { return clauses_.end(); }

    friend auto operator<=>(const Formula&, const Formula&) = default;

private:
    std::vector<Clause> clauses_; // sorted, unique
};

/// A consistent set of literals (no variable in both polarities).
class LiteralSet {
public:
    LiteralSet() = default;
    explicit LiteralSet(std::vector<Literal> literals);

    const std::vector<Literal>& literals() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    bool contains(Literal l) const;

    LiteralSet with(Literal l) const;
    /// Same set with l replaced by its negation; l must be present.
    LiteralSet flipped(Literal l) const;

    /// The corresponding set of unit clauses.
    Formula as_units() const;

    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    friend auto operator<=>(const LiteralSet&, const LiteralSet&) = default;

private:
    std::vector<Literal> lits_; // sorted, unique
};

/// Total literal occurrences.
int size(const Formula& f);

/// Clauses of f that contain l, polarity-sensitive.
Formula clauses_with_literal(const Formula& f, Literal l);

/// Truth-constant substitution: satisfied clauses are dropped, the falsified
/// literal is removed from the rest. The result never mentions x.
Formula substitute(const Formula& f, VarId x, bool value);

std::vector<VarId> variables(const Clause& c);
std::vector<VarId> variables(const Formula& f);

bool occurs(const Formula& f, Literal l);

/// At most one positive literal per clause.
bool is_horn(const Formula& f);

/// Display-name side table. Ids are dense in creation order.
class VarTable {
public:
    /// Returns the id for name, creating it if needed. Names must be non-empty.
    VarId intern(std::string_view name);
    std::optional<VarId> find(std::string_view name) const;

    const std::string& name(VarId v) const;
    int count() const { return static_cast<int>(names_.size()); }

    /// base if unused, otherwise base with apostrophes appended until free.
    VarId fresh(std::string_view base);
    /// Smallest prefix+i (i >= 1) that is unused.
    VarId fresh_indexed(std::string_view prefix);

private:
    std::vector<std::string> names_;
    std::map<std::string, VarId, std::less<>> index_;
};

} // namespace cnfmin
