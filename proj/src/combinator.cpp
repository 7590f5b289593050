#include "exergen/combinator.hpp"

#include "exergen/errors.hpp"

#include <algorithm>

namespace exergen {

namespace {

constexpr int kInf = 1 << 28;

struct MinCost {
    int depth = kInf;
    int nodes = kInf;
};

int capped_add(int a, int b) { return std::min(kInf, a + b); }

// Cheapest achievable (depth, nodes) per spec node, by fixpoint relaxation;
// cycles through alts converge because costs only decrease.
std::vector<MinCost> min_costs(const CombinatorSpec& spec) {
    const auto& nodes = spec.nodes();
    std::vector<MinCost> cost(nodes.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            MinCost next;
            std::visit(
                [&](const auto& n) {
                    using T = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<T, ConstSpec> || std::is_same_v<T, VarSpec>) {
                        next = {1, 1};
                    } else if constexpr (std::is_same_v<T, UnopSpec>) {
                        const auto& c = cost[n.child];
                        next = {capped_add(1, c.depth), capped_add(1, c.nodes)};
                    } else if constexpr (std::is_same_v<T, BinopSpec>) {
                        const auto& l = cost[n.lhs];
                        const auto& r = cost[n.rhs];
                        next = {capped_add(1, std::max(l.depth, r.depth)),
                                capped_add(1, capped_add(l.nodes, r.nodes))};
                    } else if constexpr (std::is_same_v<T, PiecewiseSpec>) {
                        const auto& gl = cost[n.guard_lhs];
                        const auto& gr = cost[n.guard_rhs];
                        const auto& br = cost[n.branch];
                        const auto& ot = cost[n.otherwise];
                        int d = std::max({gl.depth, gr.depth, br.depth, ot.depth});
                        int per_branch = capped_add(capped_add(gl.nodes, gr.nodes), br.nodes);
                        int total = capped_add(1, ot.nodes);
                        for (int b = 0; b < n.min_branches; ++b)
                            total = capped_add(total, per_branch);
                        next = {capped_add(1, d), total};
                    } else if constexpr (std::is_same_v<T, SumLoopSpec>) {
                        const auto& body = cost[n.body];
                        next = {capped_add(1, std::max(1, body.depth)),
                                capped_add(3, body.nodes)};
                    } else if constexpr (std::is_same_v<T, AltSpec>) {
                        for (SpecId c : n.children) {
                            next.depth = std::min(next.depth, cost[c].depth);
                            next.nodes = std::min(next.nodes, cost[c].nodes);
                        }
                        if (n.end) {
                            next.depth = std::min(next.depth, cost[*n.end].depth);
                            next.nodes = std::min(next.nodes, cost[*n.end].nodes);
                        }
                    }
                },
                nodes[i].v);
            if (nodes[i].max_depth && next.depth > *nodes[i].max_depth) next = {kInf, kInf};
            if (nodes[i].max_nodes && next.nodes > *nodes[i].max_nodes) next = {kInf, kInf};
            if (next.depth != cost[i].depth || next.nodes != cost[i].nodes) {
                cost[i] = next;
                changed = true;
            }
        }
    }
    return cost;
}

struct GenState {
    const CombinatorSpec& spec;
    const GenBudget& budget;
    std::vector<MinCost> costs;
    RngStream& stream;
    std::map<ExprKind, int> kind_counts;
    std::vector<std::string> loop_vars;
};

// Returns false when the kind cap is hit, failing this candidate.
bool materialize(GenState& st, ExprKind kind, int& nodes_avail) {
    if (nodes_avail < 1) return false;
    auto cap = st.budget.max_nodes_by_kind.find(kind);
    if (cap != st.budget.max_nodes_by_kind.end() &&
        st.kind_counts[kind] + 1 > cap->second) {
        return false;
    }
    ++st.kind_counts[kind];
    --nodes_avail;
    return true;
}

std::optional<ExprPtr> gen_node(GenState& st, SpecId id, int depth_avail, int& nodes_avail);

std::optional<ExprPtr> gen_core(GenState& st, SpecId id, int depth_avail, int& nodes_avail) {
    const SpecNode& node = st.spec.nodes()[id];

    if (const auto* alt = std::get_if<AltSpec>(&node.v)) {
        std::vector<SpecId> feasible;
        std::vector<double> weights;
        for (std::size_t c = 0; c < alt->children.size(); ++c) {
            SpecId child = alt->children[c];
            double w = alt->weights.empty() ? 1.0 : alt->weights[c];
            if (w <= 0) continue;
            if (st.costs[child].depth > depth_avail) continue;
            if (st.costs[child].nodes > nodes_avail) continue;
            feasible.push_back(child);
            weights.push_back(w);
        }
        if (!feasible.empty()) {
            std::size_t pick = st.stream.weighted_choice(weights);
            return gen_node(st, feasible[pick], depth_avail, nodes_avail);
        }
        if (alt->end) {
            // Forced-leaf rule: the end spec substitutes without consuming
            // the depth that ran out.
            return gen_node(st, *alt->end, std::max(depth_avail, 1), nodes_avail);
        }
        return std::nullopt;
    }

    if (st.costs[id].depth > depth_avail || st.costs[id].nodes > nodes_avail)
        return std::nullopt;

    return std::visit(
        [&](const auto& n) -> std::optional<ExprPtr> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstSpec>) {
                if (!materialize(st, ExprKind::constant, nodes_avail)) return std::nullopt;
                return make_const(st.stream.uniform_int(n.lo, n.hi));
            } else if constexpr (std::is_same_v<T, VarSpec>) {
                std::vector<std::string> pool = n.pool;
                if (n.include_loop_vars)
                    pool.insert(pool.end(), st.loop_vars.begin(), st.loop_vars.end());
                if (pool.empty()) return std::nullopt;
                if (!materialize(st, ExprKind::variable, nodes_avail)) return std::nullopt;
                auto idx = st.stream.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1);
                return make_var(pool[static_cast<std::size_t>(idx)]);
            } else if constexpr (std::is_same_v<T, UnopSpec>) {
                if (!materialize(st, ExprKind::unary, nodes_avail)) return std::nullopt;
                auto op = n.ops[static_cast<std::size_t>(
                    st.stream.uniform_int(0, static_cast<std::int64_t>(n.ops.size()) - 1))];
                auto child = gen_node(st, n.child, depth_avail - 1, nodes_avail);
                if (!child) return std::nullopt;
                return make_unary(op, *child);
            } else if constexpr (std::is_same_v<T, BinopSpec>) {
                if (!materialize(st, ExprKind::binary, nodes_avail)) return std::nullopt;
                auto op = n.ops[static_cast<std::size_t>(
                    st.stream.uniform_int(0, static_cast<std::int64_t>(n.ops.size()) - 1))];
                auto lhs = gen_node(st, n.lhs, depth_avail - 1, nodes_avail);
                if (!lhs) return std::nullopt;
                auto rhs = gen_node(st, n.rhs, depth_avail - 1, nodes_avail);
                if (!rhs) return std::nullopt;
                return make_binary(op, *lhs, *rhs);
            } else if constexpr (std::is_same_v<T, PiecewiseSpec>) {
                if (!materialize(st, ExprKind::piecewise, nodes_avail)) return std::nullopt;
                int per_branch = capped_add(
                    capped_add(st.costs[n.guard_lhs].nodes, st.costs[n.guard_rhs].nodes),
                    st.costs[n.branch].nodes);
                int spare = nodes_avail - st.costs[n.otherwise].nodes;
                int fit = per_branch > 0 ? spare / per_branch : n.max_branches;
                int hi = std::min(n.max_branches, fit);
                if (hi < n.min_branches) return std::nullopt;
                int count = static_cast<int>(st.stream.uniform_int(n.min_branches, hi));
                std::vector<PiecewiseBranch> branches;
                for (int b = 0; b < count; ++b) {
                    auto lhs = gen_node(st, n.guard_lhs, depth_avail - 1, nodes_avail);
                    if (!lhs) return std::nullopt;
                    auto rhs = gen_node(st, n.guard_rhs, depth_avail - 1, nodes_avail);
                    if (!rhs) return std::nullopt;
                    auto op = n.cmp_ops[static_cast<std::size_t>(st.stream.uniform_int(
                        0, static_cast<std::int64_t>(n.cmp_ops.size()) - 1))];
                    auto value = gen_node(st, n.branch, depth_avail - 1, nodes_avail);
                    if (!value) return std::nullopt;
                    branches.push_back({Comparison{op, *lhs, *rhs}, *value});
                }
                auto otherwise = gen_node(st, n.otherwise, depth_avail - 1, nodes_avail);
                if (!otherwise) return std::nullopt;
                return make_piecewise(std::move(branches), *otherwise);
            } else if constexpr (std::is_same_v<T, SumLoopSpec>) {
                std::string index_var;
                for (const auto& candidate : n.index_pool) {
                    if (std::find(st.loop_vars.begin(), st.loop_vars.end(), candidate) ==
                        st.loop_vars.end()) {
                        index_var = candidate;
                        break;
                    }
                }
                if (index_var.empty()) return std::nullopt;
                if (!materialize(st, ExprKind::sum_loop, nodes_avail)) return std::nullopt;
                auto lo = st.stream.uniform_int(n.lo_min, n.lo_max);
                if (!materialize(st, ExprKind::constant, nodes_avail)) return std::nullopt;
                auto hi = st.stream.uniform_int(n.hi_min, n.hi_max);
                if (!materialize(st, ExprKind::constant, nodes_avail)) return std::nullopt;
                st.loop_vars.push_back(index_var);
                auto body = gen_node(st, n.body, depth_avail - 1, nodes_avail);
                st.loop_vars.pop_back();
                if (!body) return std::nullopt;
                return make_sum_loop(index_var, make_const(lo), make_const(hi), *body);
            } else {
                return std::nullopt; // alt handled above
            }
        },
        node.v);
}

std::optional<ExprPtr> gen_node(GenState& st, SpecId id, int depth_avail, int& nodes_avail) {
    const SpecNode& node = st.spec.nodes()[id];
    if (node.max_depth) depth_avail = std::min(depth_avail, *node.max_depth);
    if (node.max_nodes) {
        int sub_avail = std::min(nodes_avail, *node.max_nodes);
        int before = sub_avail;
        auto result = gen_core(st, id, depth_avail, sub_avail);
        nodes_avail -= before - sub_avail;
        return result;
    }
    return gen_core(st, id, depth_avail, nodes_avail);
}

} // namespace

void CombinatorSpec::validate() {
    auto check_id = [&](SpecId id, const char* what) {
        if (id < 0 || id >= static_cast<SpecId>(nodes_.size()))
            throw InvalidInputError(std::string("combinator spec: bad id in ") + what);
    };
    check_id(root, "root");
    for (auto& node : nodes_) {
        if (node.max_depth && *node.max_depth < 1)
            throw InvalidInputError("combinator spec: local max_depth must be >= 1");
        if (node.max_nodes && *node.max_nodes < 0)
            throw InvalidInputError("combinator spec: local max_nodes must be >= 0");
        std::visit(
            [&](auto& n) {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, AltSpec>) {
                    if (n.children.empty())
                        throw InvalidInputError("alt: needs at least one child");
                    for (SpecId c : n.children) check_id(c, "alt child");
                    if (n.end) check_id(*n.end, "alt end");
                    if (!n.weights.empty()) {
                        if (n.weights.size() != n.children.size())
                            throw InvalidInputError("alt: one weight per child required");
                        double sum = 0;
                        for (double w : n.weights) {
                            if (w < 0) throw InvalidInputError("alt: negative weight");
                            sum += w;
                        }
                        if (sum <= 0) throw InvalidInputError("alt: weights sum to zero");
                        for (double& w : n.weights) w /= sum;
                    }
                } else if constexpr (std::is_same_v<T, ConstSpec>) {
                    if (n.lo > n.hi) throw InvalidInputError("const: empty range");
                } else if constexpr (std::is_same_v<T, UnopSpec>) {
                    if (n.ops.empty()) throw InvalidInputError("unop: empty op set");
                    check_id(n.child, "unop child");
                } else if constexpr (std::is_same_v<T, BinopSpec>) {
                    if (n.ops.empty()) throw InvalidInputError("binop: empty op set");
                    check_id(n.lhs, "binop lhs");
                    check_id(n.rhs, "binop rhs");
                } else if constexpr (std::is_same_v<T, PiecewiseSpec>) {
                    if (n.min_branches < 1 || n.max_branches < n.min_branches)
                        throw InvalidInputError("piecewise: bad branch count range");
                    if (n.cmp_ops.empty()) throw InvalidInputError("piecewise: empty cmp ops");
                    check_id(n.guard_lhs, "piecewise guard");
                    check_id(n.guard_rhs, "piecewise guard");
                    check_id(n.branch, "piecewise branch");
                    check_id(n.otherwise, "piecewise otherwise");
                } else if constexpr (std::is_same_v<T, SumLoopSpec>) {
                    if (n.lo_min > n.lo_max || n.hi_min > n.hi_max)
                        throw InvalidInputError("sumloop: empty bound range");
                    if (n.index_pool.empty())
                        throw InvalidInputError("sumloop: empty index pool");
                    check_id(n.body, "sumloop body");
                }
            },
            node.v);
    }
}

std::optional<ExprPtr> gen_expr(const CombinatorSpec& spec, const GenBudget& budget,
                                RngStream& stream) {
    if (budget.max_depth < 1 || budget.max_nodes_total < 1)
        throw InvalidInputError("gen_expr: budget must allow at least one node");
    GenState st{spec, budget, min_costs(spec), stream, {}, {}};
    if (st.costs[spec.root].depth > budget.max_depth ||
        st.costs[spec.root].nodes > budget.max_nodes_total) {
        throw BudgetUnsatisfiableError(
            "gen_expr: no construction fits the depth/node budget");
    }
    int nodes_avail = budget.max_nodes_total;
    return gen_node(st, spec.root, budget.max_depth, nodes_avail);
}

} // namespace exergen
