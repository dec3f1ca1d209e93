#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oatk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A construction's mandatory post-verification failed, or an input did not
// satisfy a verified precondition.
class VerificationError : public Error {
public:
    using Error::Error;
};

// Search node budget exhausted before the space was decided. Never silently
// conflated with exhaustion.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(unsigned long long nodes, unsigned long long budget)
        : Error("search budget exceeded: " + std::to_string(nodes) + " nodes visited (budget " +
                std::to_string(budget) + "); result inconclusive"),
          nodes_(nodes), budget_(budget) {}

    unsigned long long nodes() const { return nodes_; }
    unsigned long long budget() const { return budget_; }

private:
    unsigned long long nodes_;
    unsigned long long budget_;
};

}  // namespace oatk
