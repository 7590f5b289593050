#ifndef EXERGEN_COMBINATOR_HPP
#define EXERGEN_COMBINATOR_HPP

#include "exergen/expr.hpp"
#include "exergen/rng.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace exergen {

struct GenBudget {
    int max_depth = 5;
    int max_nodes_total = 30;
    std::map<ExprKind, int> max_nodes_by_kind;
};

// Specs form a graph indexed into CombinatorSpec::nodes so that recursive
// grammars (an alt reaching back into itself) are expressible by id.
using SpecId = int;

struct AltSpec {
    std::vector<SpecId> children;
    std::vector<double> weights; // empty = uniform; normalized by validate()
    std::optional<SpecId> end;   // forced leaf when no child fits the budget
};
struct ConstSpec {
    std::int64_t lo = 1;
    std::int64_t hi = 9;
};
struct VarSpec {
    std::vector<std::string> pool;
    bool include_loop_vars = true; // loop indices in scope join the pool
};
struct UnopSpec {
    std::vector<UnOp> ops;
    SpecId child;
};
struct BinopSpec {
    std::vector<BinOp> ops;
    SpecId lhs;
    SpecId rhs;
};
struct PiecewiseSpec {
    int min_branches = 1;
    int max_branches = 2;
    SpecId guard_lhs;
    SpecId guard_rhs;
    std::vector<CmpOp> cmp_ops;
    SpecId branch;
    SpecId otherwise;
};
struct SumLoopSpec {
    std::int64_t lo_min = 1, lo_max = 2;
    std::int64_t hi_min = 3, hi_max = 6;
    SpecId body;
    std::vector<std::string> index_pool = {"i", "j", "k"};
};

struct SpecNode {
    std::variant<AltSpec, ConstSpec, VarSpec, UnopSpec, BinopSpec, PiecewiseSpec, SumLoopSpec> v;
    // Local caps for this subtree; the tighter of local and global wins.
    std::optional<int> max_depth;
    std::optional<int> max_nodes;
};

class CombinatorSpec {
public:
    SpecId add(SpecNode node) {
        nodes_.push_back(std::move(node));
        return static_cast<SpecId>(nodes_.size()) - 1;
    }
    template <typename T>
    SpecId add(T node) {
        return add(SpecNode{std::move(node), std::nullopt, std::nullopt});
    }

    SpecId root = 0;

    const std::vector<SpecNode>& nodes() const { return nodes_; }
    std::vector<SpecNode>& nodes() { return nodes_; }

    // Checks structural invariants and normalizes alt weights in place.
    // Throws InvalidInputError on a malformed spec.
    void validate();

private:
    std::vector<SpecNode> nodes_;
};

// Random AST growth under the budget. An alt whose children all exceed the
// remaining depth/node budget falls back to its `end` spec; with no `end` the
// candidate fails (nullopt), signalling a retry to the caller. Throws
// BudgetUnsatisfiableError when no construction can ever fit the budget.
std::optional<ExprPtr> gen_expr(const CombinatorSpec& spec, const GenBudget& budget,
                                RngStream& stream);

} // namespace exergen

#endif
