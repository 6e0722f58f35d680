#pragma once

#include <stdexcept>
#include <string>

namespace lrcq {

// Every failure the library can signal, bucketed into three classes that the
// CLI maps onto exit codes: user input problems (2), search budgets running
// out (3), and internal invariant violations (4).
enum class ErrorKind { User, Budget, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message),
          kind_(kind),
          name_(std::move(name)) {}

    ErrorKind kind() const { return kind_; }
    // Stable machine-readable identifier, e.g. "NonPrimeP" or "BudgetExceeded".
    const std::string& name() const { return name_; }

private:
    ErrorKind kind_;
    std::string name_;
};

[[noreturn]] inline void fail_user(const std::string& name, const std::string& msg) {
    throw Error(ErrorKind::User, name, msg);
}

[[noreturn]] inline void fail_budget(const std::string& msg) {
    throw Error(ErrorKind::Budget, "BudgetExceeded", msg);
}

[[noreturn]] inline void fail_internal(const std::string& name, const std::string& msg) {
    throw Error(ErrorKind::Internal, name, msg);
}

}  // namespace lrcq
