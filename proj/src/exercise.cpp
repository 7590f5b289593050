#include "exergen/exercise.hpp"

namespace exergen {

const char* kind_name(ExerciseKind kind) {
    switch (kind) {
    case ExerciseKind::math: return "math";
    case ExerciseKind::tree: return "tree";
    case ExerciseKind::fsm: return "fsm";
    case ExerciseKind::bitfields: return "bitfields";
    case ExerciseKind::table: return "table";
    case ExerciseKind::binary: return "binary";
    }
    return "?";
}

std::optional<ExerciseKind> kind_from_name(const std::string& name) {
    for (auto kind : {ExerciseKind::math, ExerciseKind::tree, ExerciseKind::fsm,
                      ExerciseKind::bitfields, ExerciseKind::table, ExerciseKind::binary}) {
        if (name == kind_name(kind)) return kind;
    }
    return std::nullopt;
}

const char* column_type_name(ColumnType t) {
    switch (t) {
    case ColumnType::integer: return "integer";
    case ColumnType::text: return "text";
    case ColumnType::phone: return "phone";
    case ColumnType::date: return "date";
    }
    return "?";
}

} // namespace exergen
