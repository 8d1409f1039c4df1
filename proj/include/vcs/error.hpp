#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vcs {

enum class ErrorCode {
    ZeroVector,
    IndexOutOfRange,
    EmptyCurveSystem,
    DimensionMismatch,
    NotModified,
    NotATree,
    EmptyInput,
    NotInterior,
    NotSeifert,
    FiberFilling,
    NotClosed,
    MissingGeometryLabel,
    InvalidManifold,
    InvalidWallspace,
    InvalidComplex,
    BudgetExceeded,
    NoSlopes,
    DimensionTooLarge,
    InvalidSubtree,
    InvalidArgument,
    // parser
    Syntax,
    UnknownKey,
    MissingField,
    NotInteger,
    UnknownBlock,
    RepeatedEnd,
    Determinant,
    ThinShape,
    GeometryWithTori,
    UnusedBoundary,
    Usage,
};

constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroVector: return "zero-vector";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::EmptyCurveSystem: return "empty-curve-system";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NotModified: return "not-modified";
    case ErrorCode::NotATree: return "not-a-tree";
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::NotInterior: return "not-interior";
    case ErrorCode::NotSeifert: return "not-seifert";
    case ErrorCode::FiberFilling: return "fiber-filling";
    case ErrorCode::NotClosed: return "not-closed";
    case ErrorCode::MissingGeometryLabel: return "missing-geometry-label";
    case ErrorCode::InvalidManifold: return "invalid-manifold";
    case ErrorCode::InvalidWallspace: return "invalid-wallspace";
    case ErrorCode::InvalidComplex: return "invalid-complex";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::NoSlopes: return "no-slopes";
    case ErrorCode::DimensionTooLarge: return "dimension-too-large";
    case ErrorCode::InvalidSubtree: return "invalid-subtree";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::UnknownKey: return "unknown-key";
    case ErrorCode::MissingField: return "missing-field";
    case ErrorCode::NotInteger: return "not-integer";
    case ErrorCode::UnknownBlock: return "unknown-block";
    case ErrorCode::RepeatedEnd: return "repeated-end";
    case ErrorCode::Determinant: return "determinant";
    case ErrorCode::ThinShape: return "thin-shape";
    case ErrorCode::GeometryWithTori: return "geometry-with-tori";
    case ErrorCode::UnusedBoundary: return "unused-boundary";
    case ErrorCode::Usage: return "usage";
    }
    return "unknown";
}

/// Library error. Carries a stable code; parse errors also carry a 1-based
/// line and column (0 when not applicable).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), code_(code), line_(line), column_(column) {}

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    ErrorCode code_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace vcs
