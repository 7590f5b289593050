#ifndef EXERGEN_ERRORS_HPP
#define EXERGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exergen {

struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the generate-check-retry driver when every attempt failed.
struct ExhaustedError : std::runtime_error {
    int attempts;
    ExhaustedError(int attempts_, const std::string& what)
        : std::runtime_error(what), attempts(attempts_) {}
};

// The combinator spec cannot terminate under the requested budget at all.
struct BudgetUnsatisfiableError : std::runtime_error {
    explicit BudgetUnsatisfiableError(const std::string& what) : std::runtime_error(what) {}
};

struct LayoutMismatchError : std::runtime_error {
    explicit LayoutMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSymbolError : std::runtime_error {
    explicit UnknownSymbolError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolatedError : std::runtime_error {
    int op_index;
    PreconditionViolatedError(int op_index_, const std::string& reason)
        : std::runtime_error("pipeline op " + std::to_string(op_index_) + ": " + reason),
          op_index(op_index_) {}
};

struct OffsetOverflowError : std::runtime_error {
    explicit OffsetOverflowError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace exergen

#endif
