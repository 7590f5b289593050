#ifndef EXERGEN_EXPR_HPP
#define EXERGEN_EXPR_HPP

#include "exergen/rational.hpp"

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace exergen {

enum class UnOp { neg, abs, sqrt, ln, exp };
enum class BinOp { add, sub, mul, div, pow };
enum class CmpOp { lt, le, gt, ge, eq, ne };

enum class ExprKind { constant, variable, unary, binary, piecewise, sum_loop, self_call };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Guard of a piecewise branch; lhs/rhs never contain piecewise nodes.
struct Comparison {
    CmpOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct PiecewiseBranch {
    Comparison guard;
    ExprPtr value;
};

// Immutable expression tree. SelfCall is a recursive invocation of the named
// function whose body this tree is (recurrences are a piecewise definition
// whose non-base branch calls the function on a smaller argument).
struct Expr {
    struct Const {
        Rational value;
    };
    struct Var {
        std::string name;
    };
    struct Unary {
        UnOp op;
        ExprPtr child;
    };
    struct Binary {
        BinOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Piecewise {
        std::vector<PiecewiseBranch> branches; // >= 1
        ExprPtr otherwise;
    };
    struct SumLoop {
        std::string index_var;
        ExprPtr lo;
        ExprPtr hi;
        ExprPtr body;
    };
    struct SelfCall {
        ExprPtr arg;
    };

    std::variant<Const, Var, Unary, Binary, Piecewise, SumLoop, SelfCall> node;

    ExprKind kind() const { return static_cast<ExprKind>(node.index()); }
};

ExprPtr make_const(Rational value);
ExprPtr make_const(std::int64_t value);
ExprPtr make_var(std::string name);
ExprPtr make_unary(UnOp op, ExprPtr child);
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_piecewise(std::vector<PiecewiseBranch> branches, ExprPtr otherwise);
ExprPtr make_sum_loop(std::string index_var, ExprPtr lo, ExprPtr hi, ExprPtr body);
ExprPtr make_self_call(ExprPtr arg);

// Total node count; comparisons contribute their lhs/rhs subtrees, the
// piecewise node itself counts once.
int node_count(const ExprPtr& e);
// Nodes on the longest root-to-leaf path; a lone leaf has depth 1.
int tree_depth(const ExprPtr& e);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);
// Free variables; a sum-loop index is bound within its body only.
std::set<std::string> free_vars(const ExprPtr& e);
bool contains_self_call(const ExprPtr& e);
// Visits every node in preorder (guards before branch values).
void for_each_node(const ExprPtr& e, const std::function<void(const Expr&)>& fn);

const char* unop_name(UnOp op);
const char* binop_name(BinOp op);
const char* cmpop_symbol(CmpOp op); // ASCII: < <= > >= == !=

} // namespace exergen

#endif
