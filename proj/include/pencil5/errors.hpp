#ifndef PENCIL5_ERRORS_HPP
#define PENCIL5_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pencil5 {

/// Invalid parameters, malformed input text, or violated preconditions.
/// The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A step budget was exhausted before the computation finished.
/// The CLI maps this to exit code 3.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// The model violates a hypothesis the verification relies on
/// (degenerate fibre, generic fibre trigonal, no consistent Hilbert fit, ...).
/// The CLI maps this to exit code 1.
class HypothesesError : public std::runtime_error {
public:
    explicit HypothesesError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant failed. Always a bug, never an input problem.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace pencil5

#endif
