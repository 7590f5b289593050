#ifndef EXERGEN_NOTATION_HPP
#define EXERGEN_NOTATION_HPP

#include "exergen/combinator.hpp"
#include "exergen/exercise.hpp"
#include "exergen/rng.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exergen {

struct MathExerciseParams {
    int min_vars = 1;
    int max_vars = 2;
    GenBudget budget{5, 24, {}};
    bool allow_piecewise = true;
    bool allow_loop = true;
    bool allow_recursion = false; // recursion makes a recurrence exercise instead
    std::int64_t const_min = 1;
    std::int64_t const_max = 9;
    std::int64_t input_min = -9;
    std::int64_t input_max = 9;
    int min_nodes_after_simplify = 4;
};

struct DecisionTreeParams {
    int min_attrs = 3;
    int max_attrs = 4;
    int max_depth = 3;
    int label_count = 3;
    bool int_labels = false;
};

struct FsmParams {
    int min_states = 4;
    int max_states = 6;
    int min_alphabet = 2;
    int max_alphabet = 3;
    // Explicit transitions beyond the connectivity chain (before the map is
    // totalized with self-loops).
    int min_extra_edges = 2;
    int max_extra_edges = 4;
    std::optional<int> edge_count; // exact total when set; wins over extras
    int trace_min = 8;
    int trace_max = 16;
};

Exercise gen_math_exercise(const MathExerciseParams& params, RngStream& stream);
Exercise gen_decision_tree(const DecisionTreeParams& params, RngStream& stream);
Exercise gen_fsm(const FsmParams& params, RngStream& stream);

// Random walk from the initial state: per step a uniformly random symbol;
// returns the inputs and the per-step Moore outputs.
std::pair<std::vector<std::string>, std::vector<std::string>>
gen_walk_trace(const FsmSpec& machine, int len_min, int len_max, RngStream& stream);

// Tree walk for a full attribute assignment (values in declared order).
std::string classify(const DecisionTreeExercise& ex, const std::vector<std::string>& values);

// All distinct leaf labels actually present in the tree.
std::vector<std::string> leaf_labels(const DtNodePtr& node);

} // namespace exergen

#endif
