#include "exergen/simplify.hpp"

namespace exergen {

namespace {

const Rational* const_value(const ExprPtr& e) {
    if (const auto* c = std::get_if<Expr::Const>(&e->node)) return &c->value;
    return nullptr;
}

bool is_const(const ExprPtr& e, std::int64_t v) {
    const Rational* r = const_value(e);
    return r && *r == Rational(v);
}

ExprPtr fold_unary(UnOp op, const ExprPtr& child) {
    const Rational* v = const_value(child);
    if (!v) return nullptr;
    switch (op) {
    case UnOp::neg: return make_const(v->neg());
    case UnOp::abs: return make_const(v->abs());
    case UnOp::sqrt: {
        auto r = v->sqrt();
        return r ? make_const(*r) : nullptr;
    }
    case UnOp::ln: return *v == Rational(1) ? make_const(Rational(0)) : nullptr;
    case UnOp::exp: return v->is_zero() ? make_const(Rational(1)) : nullptr;
    }
    return nullptr;
}

ExprPtr fold_binary(BinOp op, const ExprPtr& lhs, const ExprPtr& rhs) {
    const Rational* a = const_value(lhs);
    const Rational* b = const_value(rhs);
    if (!a || !b) return nullptr;
    std::optional<Rational> r;
    switch (op) {
    case BinOp::add: r = a->add(*b); break;
    case BinOp::sub: r = a->sub(*b); break;
    case BinOp::mul: r = a->mul(*b); break;
    case BinOp::div: r = a->div(*b); break;
    case BinOp::pow: r = a->pow(*b); break;
    }
    return r ? make_const(*r) : nullptr;
}

// Identity rules for a binary node whose children are already simplified.
ExprPtr rewrite_binary(BinOp op, const ExprPtr& lhs, const ExprPtr& rhs) {
    if (ExprPtr folded = fold_binary(op, lhs, rhs)) return folded;
    switch (op) {
    case BinOp::add:
        if (is_const(rhs, 0)) return lhs;
        if (is_const(lhs, 0)) return rhs;
        break;
    case BinOp::sub:
        if (is_const(rhs, 0)) return lhs;
        break;
    case BinOp::mul:
        if (is_const(rhs, 1)) return lhs;
        if (is_const(lhs, 1)) return rhs;
        if (is_const(rhs, 0) || is_const(lhs, 0)) return make_const(Rational(0));
        break;
    case BinOp::div:
        if (is_const(rhs, 1)) return lhs;
        break;
    case BinOp::pow:
        if (is_const(rhs, 1)) return lhs;
        break;
    }
    return nullptr;
}

ExprPtr rewrite_unary(UnOp op, const ExprPtr& child) {
    if (ExprPtr folded = fold_unary(op, child)) return folded;
    if (op == UnOp::neg) {
        if (const auto* u = std::get_if<Expr::Unary>(&child->node)) {
            if (u->op == UnOp::neg) return u->child;
        }
    }
    return nullptr;
}

} // namespace

ExprPtr simplify(const ExprPtr& e) {
    if (!e) return e;
    return std::visit(
        [&](const auto& n) -> ExprPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Const> || std::is_same_v<T, Expr::Var>) {
                return e;
            } else if constexpr (std::is_same_v<T, Expr::Unary>) {
                ExprPtr child = simplify(n.child);
                ExprPtr node = child == n.child ? e : make_unary(n.op, child);
                if (ExprPtr rewritten = rewrite_unary(n.op, child)) return rewritten;
                return node;
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                ExprPtr lhs = simplify(n.lhs);
                ExprPtr rhs = simplify(n.rhs);
                if (ExprPtr rewritten = rewrite_binary(n.op, lhs, rhs)) return rewritten;
                if (lhs == n.lhs && rhs == n.rhs) return e;
                return make_binary(n.op, lhs, rhs);
            } else if constexpr (std::is_same_v<T, Expr::Piecewise>) {
                std::vector<PiecewiseBranch> branches;
                branches.reserve(n.branches.size());
                bool changed = false;
                for (const auto& br : n.branches) {
                    PiecewiseBranch out{
                        Comparison{br.guard.op, simplify(br.guard.lhs), simplify(br.guard.rhs)},
                        simplify(br.value)};
                    changed = changed || out.guard.lhs != br.guard.lhs ||
                              out.guard.rhs != br.guard.rhs || out.value != br.value;
                    branches.push_back(std::move(out));
                }
                ExprPtr otherwise = simplify(n.otherwise);
                if (!changed && otherwise == n.otherwise) return e;
                return make_piecewise(std::move(branches), otherwise);
            } else if constexpr (std::is_same_v<T, Expr::SumLoop>) {
                ExprPtr lo = simplify(n.lo);
                ExprPtr hi = simplify(n.hi);
                ExprPtr body = simplify(n.body);
                if (lo == n.lo && hi == n.hi && body == n.body) return e;
                return make_sum_loop(n.index_var, lo, hi, body);
            } else {
                const auto& call = std::get<Expr::SelfCall>(e->node);
                ExprPtr arg = simplify(call.arg);
                if (arg == call.arg) return e;
                return make_self_call(arg);
            }
        },
        e->node);
}

} // namespace exergen
