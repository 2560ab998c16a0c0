#ifndef HJUMP_ERRORS_HPP
#define HJUMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hjump {

// Thrown when an enumeration would exceed its configured operation budget.
// Carries the budget that would have been required so callers can report it.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, long long required, long long budget)
        : std::runtime_error(what + " (required " + std::to_string(required) +
                             ", budget " + std::to_string(budget) + ")"),
          required_(required),
          budget_(budget) {}

    long long required() const { return required_; }
    long long budget() const { return budget_; }

private:
    long long required_;
    long long budget_;
};

}  // namespace hjump

#endif
