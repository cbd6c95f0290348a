#pragma once

#include <stdexcept>
#include <string>

namespace schurforge {

/// Base of every error raised by the library. `name()` is a stable
/// identifier (e.g. "NotSchur") that the CLI reports verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Search budgets ran out; the answer is unknown rather than negative.
class BudgetExhausted : public Error {
public:
    explicit BudgetExhausted(const std::string& message) : Error("BudgetExhausted", message) {}
};

[[noreturn]] inline void fail(const std::string& name, const std::string& message) {
    throw Error(name, message);
}

}  // namespace schurforge
