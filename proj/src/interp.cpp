#include "exergen/interp.hpp"

#include "exergen/errors.hpp"

#include <cmath>
#include <unordered_map>

namespace exergen {

namespace {

constexpr double kDivGuard = 1e-9;

struct EvalContext {
    const RecursiveDef* self = nullptr;
    std::unordered_map<const Expr*, int> preorder; // node -> index
    int recursion_depth = 0;
};

struct EvalFailure {
    DomainError err;
};

double eval_node(const ExprPtr& e, const Env& env, EvalContext& ctx);

int index_of(const ExprPtr& e, const EvalContext& ctx) {
    auto it = ctx.preorder.find(e.get());
    return it == ctx.preorder.end() ? -1 : it->second;
}

[[noreturn]] void fail(const ExprPtr& at, DomainErrorKind kind, const EvalContext& ctx) {
    throw EvalFailure{DomainError{kind, index_of(at, ctx)}};
}

double finite_or_fail(double v, const ExprPtr& at, const EvalContext& ctx) {
    if (!std::isfinite(v)) fail(at, DomainErrorKind::non_finite, ctx);
    return v;
}

bool eval_guard(const Comparison& cmp, const Env& env, EvalContext& ctx) {
    double lhs = eval_node(cmp.lhs, env, ctx);
    double rhs = eval_node(cmp.rhs, env, ctx);
    switch (cmp.op) {
    case CmpOp::lt: return lhs < rhs;
    case CmpOp::le: return lhs <= rhs;
    case CmpOp::gt: return lhs > rhs;
    case CmpOp::ge: return lhs >= rhs;
    case CmpOp::eq: return lhs == rhs;
    case CmpOp::ne: return lhs != rhs;
    }
    return false;
}

double eval_node(const ExprPtr& e, const Env& env, EvalContext& ctx) {
    return std::visit(
        [&](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Const>) {
                return n.value.to_double();
            } else if constexpr (std::is_same_v<T, Expr::Var>) {
                auto it = env.find(n.name);
                if (it == env.end()) fail(e, DomainErrorKind::unbound_var, ctx);
                return it->second;
            } else if constexpr (std::is_same_v<T, Expr::Unary>) {
                double child = eval_node(n.child, env, ctx);
                switch (n.op) {
                case UnOp::neg: return -child;
                case UnOp::abs: return std::fabs(child);
                case UnOp::sqrt:
                    if (child < 0) fail(e, DomainErrorKind::sqrt_negative, ctx);
                    return std::sqrt(child);
                case UnOp::ln:
                    if (child <= 0) fail(e, DomainErrorKind::log_nonpositive, ctx);
                    return finite_or_fail(std::log(child), e, ctx);
                case UnOp::exp: return finite_or_fail(std::exp(child), e, ctx);
                }
                return 0;
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                double lhs = eval_node(n.lhs, env, ctx);
                double rhs = eval_node(n.rhs, env, ctx);
                switch (n.op) {
                case BinOp::add: return finite_or_fail(lhs + rhs, e, ctx);
                case BinOp::sub: return finite_or_fail(lhs - rhs, e, ctx);
                case BinOp::mul: return finite_or_fail(lhs * rhs, e, ctx);
                case BinOp::div:
                    if (std::fabs(rhs) < kDivGuard) fail(e, DomainErrorKind::div_by_zero, ctx);
                    return finite_or_fail(lhs / rhs, e, ctx);
                case BinOp::pow: return finite_or_fail(std::pow(lhs, rhs), e, ctx);
                }
                return 0;
            } else if constexpr (std::is_same_v<T, Expr::Piecewise>) {
                for (const auto& branch : n.branches) {
                    if (eval_guard(branch.guard, env, ctx)) {
                        return eval_node(branch.value, env, ctx);
                    }
                }
                return eval_node(n.otherwise, env, ctx);
            } else if constexpr (std::is_same_v<T, Expr::SumLoop>) {
                double lo_raw = eval_node(n.lo, env, ctx);
                double hi_raw = eval_node(n.hi, env, ctx);
                if (hi_raw - lo_raw + 1 > kEvalStepLimit)
                    fail(e, DomainErrorKind::step_limit, ctx);
                auto lo = std::llround(lo_raw);
                auto hi = std::llround(hi_raw);
                double total = 0;
                Env inner = env;
                for (auto i = lo; i <= hi; ++i) {
                    inner[n.index_var] = static_cast<double>(i);
                    total += eval_node(n.body, inner, ctx);
                }
                return finite_or_fail(total, e, ctx);
            } else {
                const auto& call = std::get<Expr::SelfCall>(e->node);
                if (ctx.self == nullptr) fail(e, DomainErrorKind::unbound_var, ctx);
                if (++ctx.recursion_depth > kEvalStepLimit)
                    fail(e, DomainErrorKind::step_limit, ctx);
                double arg = eval_node(call.arg, env, ctx);
                Env callee{{ctx.self->param, arg}};
                double result = eval_node(ctx.self->body, callee, ctx);
                --ctx.recursion_depth;
                return result;
            }
        },
        e->node);
}

} // namespace

const char* domain_error_name(DomainErrorKind kind) {
    switch (kind) {
    case DomainErrorKind::div_by_zero: return "div_by_zero";
    case DomainErrorKind::log_nonpositive: return "log_nonpositive";
    case DomainErrorKind::sqrt_negative: return "sqrt_negative";
    case DomainErrorKind::unbound_var: return "unbound_var";
    case DomainErrorKind::step_limit: return "step_limit";
    case DomainErrorKind::non_finite: return "non_finite";
    }
    return "?";
}

EvalOutcome eval_expr(const ExprPtr& e, const Env& env, const RecursiveDef* self) {
    EvalContext ctx;
    ctx.self = self;
    int index = 0;
    for_each_node(e, [&](const Expr& n) { ctx.preorder.emplace(&n, index++); });
    if (self && self->body != e) {
        for_each_node(self->body, [&](const Expr& n) { ctx.preorder.emplace(&n, index++); });
    }
    try {
        double v = eval_node(e, env, ctx);
        if (!std::isfinite(v)) return {DomainError{DomainErrorKind::non_finite, 0}};
        return {v};
    } catch (const EvalFailure& failure) {
        return {failure.err};
    }
}

std::vector<std::string> run_machine(const FsmSpec& machine,
                                     std::span<const std::string> trace) {
    std::vector<std::string> outputs;
    outputs.reserve(trace.size());
    int state = machine.initial;
    for (const auto& symbol : trace) {
        int sym = machine.symbol_index(symbol);
        if (sym < 0) throw UnknownSymbolError("run_machine: unknown symbol '" + symbol + "'");
        state = machine.next[static_cast<std::size_t>(state)][static_cast<std::size_t>(sym)];
        outputs.push_back(machine.outputs[static_cast<std::size_t>(state)]);
    }
    return outputs;
}

} // namespace exergen
