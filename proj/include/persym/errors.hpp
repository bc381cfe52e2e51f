#pragma once

#include <stdexcept>
#include <string>

namespace persym {

// A computation was refused because it exceeds the configured work budget.
// The message always names the required and allowed bit counts.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// The moment system has more unknowns than aggregate equations.
struct UnderdeterminedError : std::runtime_error {
    explicit UnderdeterminedError(const std::string& what) : std::runtime_error(what) {}
};

// An exactly-solved quantity came out non-integral or negative where a count
// was required; signals an inconsistent input (e.g. a corrupted distribution
// or a bad postulate), never a rounding artifact.
struct NonIntegralError : std::runtime_error {
    explicit NonIntegralError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace persym
