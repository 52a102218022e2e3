#ifndef ARCHOPT_ERRORS_HPP
#define ARCHOPT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace archopt {

/// A single broken model invariant: which element and which rule.
struct Violation {
    std::string element;
    std::string rule;

    bool operator==(const Violation&) const = default;
};

std::string describe(const std::vector<Violation>& violations);

/// Model file could not be read or is not syntactically valid.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Model is syntactically fine but breaks one or more invariants.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// A refactoring action was applied although its precondition fails.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(Violation v, const std::string& what)
        : std::runtime_error(what), violation_(std::move(v)) {}

    const Violation& violation() const { return violation_; }

private:
    Violation violation_;
};

/// Sampling could not produce a valid value within its retry budget.
class ExhaustionError : public std::runtime_error {
public:
    explicit ExhaustionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace archopt

#endif
