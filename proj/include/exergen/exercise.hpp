#ifndef EXERGEN_EXERCISE_HPP
#define EXERGEN_EXERCISE_HPP

#include "exergen/expr.hpp"
#include "exergen/machine.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace exergen {

enum class ExerciseKind { math, tree, fsm, bitfields, table, binary };

const char* kind_name(ExerciseKind kind);
std::optional<ExerciseKind> kind_from_name(const std::string& name);

// ---- notation->code payloads ----

struct MathExercise {
    std::string fname = "f";
    std::vector<std::string> vars;
    ExprPtr body;
    bool recursive = false;
    // Integer test-input range per variable.
    std::int64_t input_min = -9;
    std::int64_t input_max = 9;
};

struct DtAttribute {
    struct IntRange {
        std::int64_t lo, hi;
    };
    struct Boolean {};
    struct Enum {
        std::vector<std::string> labels;
    };
    std::string name;
    std::variant<IntRange, Boolean, Enum> domain;
};

struct DtNode;
using DtNodePtr = std::shared_ptr<const DtNode>;

struct DtTest {
    int attr = 0;
    // Int attributes: threshold comparison. Boolean: yes-branch is "true".
    // Enum: yes-branch is "== label".
    CmpOp int_op = CmpOp::lt;
    std::int64_t threshold = 0;
    std::string enum_label;
};

struct DtNode {
    struct Leaf {
        std::string label;
    };
    struct Internal {
        DtTest test;
        DtNodePtr yes;
        DtNodePtr no;
    };
    std::variant<Leaf, Internal> v;
};

struct DecisionTreeExercise {
    std::vector<DtAttribute> attrs;
    std::vector<std::string> labels;
    DtNodePtr root;
    bool int_labels = false; // labels render as integers instead of strings
};

struct FsmExercise {
    FsmSpec machine;
    int trace_min = 8;
    int trace_max = 16;
};

// ---- data-format payloads ----

struct BitLayout {
    int word_size = 16; // 8, 16, 32 or 64
    // Ordered fields packed from the most-significant end; low bits unused.
    std::vector<std::pair<std::string, int>> fields; // (name, width)

    int used_bits() const {
        int total = 0;
        for (const auto& f : fields) total += f.second;
        return total;
    }
    // Bit index of the field's least significant bit.
    int low_bit(std::size_t field_index) const {
        int hi = word_size;
        for (std::size_t i = 0; i <= field_index; ++i) hi -= fields[i].second;
        return hi;
    }
};

struct BitfieldExercise {
    BitLayout input;
    BitLayout output;
};

enum class ColumnType { integer, text, phone, date };
const char* column_type_name(ColumnType t);

struct Table {
    std::vector<std::string> col_names;
    std::vector<std::vector<std::string>> rows;

    std::size_t cols() const { return col_names.size(); }
    bool rectangular() const {
        for (const auto& r : rows)
            if (r.size() != col_names.size()) return false;
        return true;
    }
    int col_index(const std::string& name) const {
        for (std::size_t i = 0; i < col_names.size(); ++i)
            if (col_names[i] == name) return static_cast<int>(i);
        return -1;
    }
};

struct OpSplitColumn {
    std::string col;
    char sep;
};
struct OpDeleteEmptyRowsCols {};
struct OpDedupeRows {};
struct OpDedupeCols {};
struct OpSortBy {
    std::string col;
    bool ascending = true;
    bool numeric = false;
};
struct OpCellTransform {
    std::string col;
    std::string transform; // id in the transform catalog
};
struct OpTranspose {};

using TableOp = std::variant<OpSplitColumn, OpDeleteEmptyRowsCols, OpDedupeRows, OpDedupeCols,
                             OpSortBy, OpCellTransform, OpTranspose>;

struct TableExercise {
    std::vector<ColumnType> col_types;
    Table input;
    std::vector<TableOp> pipeline;
};

struct FormatNode;
using FormatPtr = std::shared_ptr<const FormatNode>;

struct FormatNode {
    struct U8 {};
    struct U16 {};
    struct U32 {};
    struct Array {
        int count;
        FormatPtr elem;
    };
    struct Struct {
        std::vector<std::pair<std::string, FormatPtr>> fields;
    };
    struct Ref {
        FormatPtr target; // stored as a 16-bit absolute byte offset
    };
    std::variant<U8, U16, U32, Array, Struct, Ref> v;
};

struct BinaryFormatExercise {
    FormatPtr root;
};

struct Exercise {
    ExerciseKind kind;
    std::variant<MathExercise, DecisionTreeExercise, FsmExercise, BitfieldExercise,
                 TableExercise, BinaryFormatExercise>
        payload;
};

} // namespace exergen

#endif
