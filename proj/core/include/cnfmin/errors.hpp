#pragma once

#include <stdexcept>
#include <string>

namespace cnfmin {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A clause was built from literals mentioning some variable with both polarities.
class tautology_error : public error {
public:
    using error::error;
};

/// A literal set was built with some variable present in both polarities.
class inconsistent_literals : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, int line = 0, int column = 0)
        : error(format(what, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        std::string s = what;
        if (line > 0) s += " (line " + std::to_string(line) + ")";
        if (column > 0) s += " (column " + std::to_string(column) + ")";
        return s;
    }

    int line_;
    int column_;
};

class io_error : public error {
public:
    using error::error;
};

/// A configured cap was reached before the computation finished.
class resource_limit_error : public error {
public:
    using error::error;
};

/// Clause splitting cannot reach a superirredundant state.
class repair_error : public error {
public:
    using error::error;
};

} // namespace cnfmin
