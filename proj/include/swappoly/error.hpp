#ifndef SWAPPOLY_ERROR_HPP
#define SWAPPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace swappoly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape / conformability violations in exact linear algebra.
struct DimensionError : Error {
    using Error::Error;
};

// A streaming or symbolic expansion would exceed the configured work budget.
struct BudgetError : Error {
    BudgetError(const std::string& msg, unsigned long long estimate, unsigned long long budget)
        : Error(msg + " (estimated work " + std::to_string(estimate) + ", budget " +
                std::to_string(budget) + ")"),
          estimate(estimate),
          budget(budget) {}
    unsigned long long estimate;
    unsigned long long budget;
};

struct ParseError : Error {
    using Error::Error;
};

// Parameters outside a construction's hypotheses (e.g. odd d passed to the even route).
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace swappoly

#endif
