#ifndef EXERGEN_INTERP_HPP
#define EXERGEN_INTERP_HPP

#include "exergen/expr.hpp"
#include "exergen/machine.hpp"

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace exergen {

using Env = std::map<std::string, double>;

enum class DomainErrorKind {
    div_by_zero,
    log_nonpositive,
    sqrt_negative,
    unbound_var,
    step_limit,
    non_finite, // NaN or +/-Inf produced by an otherwise defined operation
};

const char* domain_error_name(DomainErrorKind kind);

struct DomainError {
    DomainErrorKind kind;
    int node_index; // preorder index of the failing node
};

// Errors are data, not aborts: sampling discards failing inputs.
struct EvalOutcome {
    std::variant<double, DomainError> v;

    bool ok() const { return v.index() == 0; }
    double value() const { return std::get<double>(v); }
    const DomainError& error() const { return std::get<DomainError>(v); }
};

// One-parameter recurrence: SelfCall nodes inside `body` re-enter `body`
// with the callee's argument bound to `param`.
struct RecursiveDef {
    std::string fname;
    std::string param;
    ExprPtr body;
};

constexpr int kEvalStepLimit = 10000; // per-loop iterations and recursion depth

// Strict recursive evaluation. Division guard |denominator| < 1e-9, sum-loop
// bounds rounded to nearest integer, loop iterations and recursion depth
// capped at kEvalStepLimit.
EvalOutcome eval_expr(const ExprPtr& e, const Env& env, const RecursiveDef* self = nullptr);

// Moore machine run: emits the destination state's output per input symbol.
// Throws UnknownSymbolError for symbols outside the alphabet.
std::vector<std::string> run_machine(const FsmSpec& machine, std::span<const std::string> trace);

} // namespace exergen

#endif
