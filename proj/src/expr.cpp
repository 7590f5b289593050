#include "exergen/expr.hpp"

#include <algorithm>

namespace exergen {

namespace {

template <typename T>
ExprPtr wrap(T&& node) {
    return std::make_shared<Expr>(Expr{std::forward<T>(node)});
}

} // namespace

ExprPtr make_const(Rational value) { return wrap(Expr::Const{value}); }
ExprPtr make_const(std::int64_t value) { return wrap(Expr::Const{Rational(value)}); }
ExprPtr make_var(std::string name) { return wrap(Expr::Var{std::move(name)}); }
ExprPtr make_unary(UnOp op, ExprPtr child) { return wrap(Expr::Unary{op, std::move(child)}); }
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
    return wrap(Expr::Binary{op, std::move(lhs), std::move(rhs)});
}
ExprPtr make_piecewise(std::vector<PiecewiseBranch> branches, ExprPtr otherwise) {
    return wrap(Expr::Piecewise{std::move(branches), std::move(otherwise)});
}
ExprPtr make_sum_loop(std::string index_var, ExprPtr lo, ExprPtr hi, ExprPtr body) {
    return wrap(Expr::SumLoop{std::move(index_var), std::move(lo), std::move(hi), std::move(body)});
}
ExprPtr make_self_call(ExprPtr arg) { return wrap(Expr::SelfCall{std::move(arg)}); }

void for_each_node(const ExprPtr& e, const std::function<void(const Expr&)>& fn) {
    if (!e) return;
    fn(*e);
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Unary>) {
                for_each_node(n.child, fn);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                for_each_node(n.lhs, fn);
                for_each_node(n.rhs, fn);
            } else if constexpr (std::is_same_v<T, Expr::Piecewise>) {
                for (const auto& br : n.branches) {
                    for_each_node(br.guard.lhs, fn);
                    for_each_node(br.guard.rhs, fn);
                    for_each_node(br.value, fn);
                }
                for_each_node(n.otherwise, fn);
            } else if constexpr (std::is_same_v<T, Expr::SumLoop>) {
                for_each_node(n.lo, fn);
                for_each_node(n.hi, fn);
                for_each_node(n.body, fn);
            } else if constexpr (std::is_same_v<T, Expr::SelfCall>) {
                for_each_node(n.arg, fn);
            }
        },
        e->node);
}

int node_count(const ExprPtr& e) {
    int count = 0;
    for_each_node(e, [&](const Expr&) { ++count; });
    return count;
}

int tree_depth(const ExprPtr& e) {
    if (!e) return 0;
    return std::visit(
        [&](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Const> || std::is_same_v<T, Expr::Var>) {
                return 1;
            } else if constexpr (std::is_same_v<T, Expr::Unary>) {
                return 1 + tree_depth(n.child);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                return 1 + std::max(tree_depth(n.lhs), tree_depth(n.rhs));
            } else if constexpr (std::is_same_v<T, Expr::Piecewise>) {
                int deepest = tree_depth(n.otherwise);
                for (const auto& br : n.branches) {
                    deepest = std::max({deepest, tree_depth(br.guard.lhs),
                                        tree_depth(br.guard.rhs), tree_depth(br.value)});
                }
                return 1 + deepest;
            } else if constexpr (std::is_same_v<T, Expr::SumLoop>) {
                return 1 + std::max({tree_depth(n.lo), tree_depth(n.hi), tree_depth(n.body)});
            } else {
                return 1 + tree_depth(std::get<Expr::SelfCall>(e->node).arg);
            }
        },
        e->node);
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, Expr::Const>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, Expr::Var>) {
                return na.name == nb.name;
            } else if constexpr (std::is_same_v<T, Expr::Unary>) {
                return na.op == nb.op && structurally_equal(na.child, nb.child);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                return na.op == nb.op && structurally_equal(na.lhs, nb.lhs) &&
                       structurally_equal(na.rhs, nb.rhs);
            } else if constexpr (std::is_same_v<T, Expr::Piecewise>) {
                if (na.branches.size() != nb.branches.size()) return false;
                for (std::size_t i = 0; i < na.branches.size(); ++i) {
                    const auto& ba = na.branches[i];
                    const auto& bb = nb.branches[i];
                    if (ba.guard.op != bb.guard.op) return false;
                    if (!structurally_equal(ba.guard.lhs, bb.guard.lhs)) return false;
                    if (!structurally_equal(ba.guard.rhs, bb.guard.rhs)) return false;
                    if (!structurally_equal(ba.value, bb.value)) return false;
                }
                return structurally_equal(na.otherwise, nb.otherwise);
            } else if constexpr (std::is_same_v<T, Expr::SumLoop>) {
                return na.index_var == nb.index_var && structurally_equal(na.lo, nb.lo) &&
                       structurally_equal(na.hi, nb.hi) && structurally_equal(na.body, nb.body);
            } else {
                return structurally_equal(na.arg, std::get<Expr::SelfCall>(b->node).arg);
            }
        },
        a->node);
}

namespace {

void collect_free(const ExprPtr& e, std::set<std::string>& bound, std::set<std::string>& out) {
    if (!e) return;
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expr::Var>) {
                if (!bound.count(n.name)) out.insert(n.name);
            } else if constexpr (std::is_same_v<T, Expr::Unary>) {
                collect_free(n.child, bound, out);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                collect_free(n.lhs, bound, out);
                collect_free(n.rhs, bound, out);
            } else if constexpr (std::is_same_v<T, Expr::Piecewise>) {
                for (const auto& br : n.branches) {
                    collect_free(br.guard.lhs, bound, out);
                    collect_free(br.guard.rhs, bound, out);
                    collect_free(br.value, bound, out);
                }
                collect_free(n.otherwise, bound, out);
            } else if constexpr (std::is_same_v<T, Expr::SumLoop>) {
                collect_free(n.lo, bound, out);
                collect_free(n.hi, bound, out);
                bool fresh = bound.insert(n.index_var).second;
                collect_free(n.body, bound, out);
                if (fresh) bound.erase(n.index_var);
            } else if constexpr (std::is_same_v<T, Expr::SelfCall>) {
                collect_free(n.arg, bound, out);
            }
        },
        e->node);
}

} // namespace

std::set<std::string> free_vars(const ExprPtr& e) {
    std::set<std::string> bound;
    std::set<std::string> out;
    collect_free(e, bound, out);
    return out;
}

bool contains_self_call(const ExprPtr& e) {
    bool found = false;
    for_each_node(e, [&](const Expr& n) {
        if (n.kind() == ExprKind::self_call) found = true;
    });
    return found;
}

const char* unop_name(UnOp op) {
    switch (op) {
    case UnOp::neg: return "neg";
    case UnOp::abs: return "abs";
    case UnOp::sqrt: return "sqrt";
    case UnOp::ln: return "ln";
    case UnOp::exp: return "exp";
    }
    return "?";
}

const char* binop_name(BinOp op) {
    switch (op) {
    case BinOp::add: return "add";
    case BinOp::sub: return "sub";
    case BinOp::mul: return "mul";
    case BinOp::div: return "div";
    case BinOp::pow: return "pow";
    }
    return "?";
}

const char* cmpop_symbol(CmpOp op) {
    switch (op) {
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::gt: return ">";
    case CmpOp::ge: return ">=";
    case CmpOp::eq: return "==";
    case CmpOp::ne: return "!=";
    }
    return "?";
}

} // namespace exergen
