#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cnfmin/driver.hpp"

namespace {

void usage(std::ostream& out) {
    out << "usage: cnfmin -f [flags] TOKEN...        inline clause tokens\n"
           "       cnfmin -t FILE [flags]            problem file\n"
           "       cnfmin -reduction KIND [flags] TOKEN...\n"
           "\n"
           "flags:\n"
           "  -minimal          also report the minimum-size equivalent formulas\n"
           "  -forget VARS      forget these variables (single letters)\n"
           "  -keep VARS        keep only these variables\n"
           "  -bound K          report whether forgetting fits in size K\n"
           "  -reduction KIND   horn-conp | horn-np | general-p2 | general-s2\n"
           "  -verify           verify the generated reduction instance\n"
           "  -machine          line-oriented section<TAB>payload output\n"
           "  -cap-closure N    resolution closure clause cap (default 100000)\n"
           "  -cap-enum N       literal-set enumeration cap (default 2^20)\n"
           "\n"
           "clause tokens: 'da' is d or a, '-ab' negates a, 'c->d' is an\n"
           "implication, 'a=bc' expands the biconditional of a with b and c.\n"
           "For general-p2/general-s2 the first two tokens are the outer and\n"
           "inner quantifier blocks ('.' for an empty block), the rest the\n"
           "matrix (clauses, or terms for general-s2).\n";
}

bool parse_number(const std::string& text, long& out) {
    try {
        std::size_t used = 0;
        out = std::stol(text, &used);
        return used == text.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    cnfmin::RunConfig config;
    bool inline_mode = false;

    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        auto next = [&](const char* what) -> const std::string& {
            if (i + 1 >= args.size()) {
                std::cerr << "error: " << arg << " needs " << what << '\n';
                std::exit(cnfmin::exit_code::parse);
            }
            return args[++i];
        };

        if (arg == "-h" || arg == "--help") {
            usage(std::cout);
            return cnfmin::exit_code::ok;
        } else if (arg == "-f") {
            inline_mode = true;
        } else if (arg == "-t") {
            config.problem_path = next("a file path");
        } else if (arg == "-minimal") {
            config.minimal = true;
        } else if (arg == "-forget") {
            config.forget_names = next("variable letters");
        } else if (arg == "-keep") {
            config.keep_names = next("variable letters");
        } else if (arg == "-bound") {
            long k = 0;
            if (!parse_number(next("an integer"), k) || k < 0) {
                std::cerr << "error: -bound needs a non-negative integer\n";
                return cnfmin::exit_code::parse;
            }
            config.bound = static_cast<int>(k);
        } else if (arg == "-reduction") {
            auto kind = cnfmin::reduction_kind_from(next("a kind"));
            if (!kind) {
                std::cerr << "error: unknown reduction kind\n";
                return cnfmin::exit_code::parse;
            }
            config.reduction = kind;
        } else if (arg == "-verify") {
            config.verify = true;
        } else if (arg == "-machine") {
            config.machine = true;
        } else if (arg == "-cap-closure") {
            long n = 0;
            if (!parse_number(next("an integer"), n) || n <= 0) {
                std::cerr << "error: -cap-closure needs a positive integer\n";
                return cnfmin::exit_code::parse;
            }
            config.cap_closure = static_cast<std::size_t>(n);
        } else if (arg == "-cap-enum") {
            long n = 0;
            if (!parse_number(next("an integer"), n) || n <= 0) {
                std::cerr << "error: -cap-enum needs a positive integer\n";
                return cnfmin::exit_code::parse;
            }
            config.cap_enum = static_cast<std::size_t>(n);
        } else if (!arg.empty() && arg[0] == '-' && arg.size() > 1 &&
                   !std::isalpha(static_cast<unsigned char>(arg[1]))) {
            std::cerr << "error: unknown flag " << arg << '\n';
            return cnfmin::exit_code::parse;
        } else {
            config.tokens.push_back(arg);
        }
    }

    if (config.reduction) {
        if (config.problem_path || inline_mode) {
            std::cerr << "error: -reduction does not combine with -f or -t\n";
            return cnfmin::exit_code::parse;
        }
        return cnfmin::run_reduction(config, std::cout, std::cerr);
    }
    if (config.problem_path && inline_mode) {
        std::cerr << "error: -f and -t are mutually exclusive\n";
        return cnfmin::exit_code::parse;
    }
    if (!config.problem_path && !inline_mode) {
        usage(std::cerr);
        return cnfmin::exit_code::parse;
    }
    if (config.problem_path && !config.tokens.empty()) {
        std::cerr << "error: stray tokens with -t\n";
        return cnfmin::exit_code::parse;
    }
    return cnfmin::run(config, std::cout, std::cerr);
}
