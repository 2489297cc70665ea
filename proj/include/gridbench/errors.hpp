#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridbench {

/// Root of the library's failure hierarchy.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent data. CLI maps this to exit code 2.
struct DataError : Error {
    using Error::Error;
};

/// Filesystem or codec I/O failure. CLI maps this to exit code 3.
struct IoError : Error {
    using Error::Error;
};

struct ParseError : DataError {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : DataError("parse error at offset " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

struct RaggedRows : DataError {
    std::size_t row_index;
    explicit RaggedRows(std::size_t row)
        : DataError("row " + std::to_string(row) + " has a different length"),
          row_index(row) {}
};

struct ValueOutOfRange : DataError {
    long long value;
    explicit ValueOutOfRange(long long v)
        : DataError("cell value " + std::to_string(v) + " out of range"), value(v) {}
};

struct BadDimensions : DataError {
    using DataError::DataError;
};

struct DimensionMismatch : DataError {
    using DataError::DataError;
};

struct UnmappedCellValue : DataError {
    int value;
    explicit UnmappedCellValue(int v)
        : DataError("palette has no entry for cell value " + std::to_string(v)), value(v) {}
};

struct AmbiguousCell : DataError {
    int row, col;
    AmbiguousCell(int r, int c)
        : DataError("cell (" + std::to_string(r) + "," + std::to_string(c) +
                    ") does not decode to a unique palette entry"),
          row(r), col(c) {}
};

struct GridOutOfBounds : DataError {
    using DataError::DataError;
};

struct MissingAttempts : DataError {
    std::size_t test_index;
    explicit MissingAttempts(std::size_t i)
        : DataError("no attempts for test input " + std::to_string(i)), test_index(i) {}
};

struct BudgetExceeded : DataError {
    using DataError::DataError;
};

struct InvalidGivens : DataError {
    using DataError::DataError;
};

struct Unsatisfiable : DataError {
    int clue_target;
    explicit Unsatisfiable(int target)
        : DataError("cannot dig down to " + std::to_string(target) +
                    " clues while keeping the solution unique"),
          clue_target(target) {}
};

struct GenerationExhausted : DataError {
    explicit GenerationExhausted(const std::string& what) : DataError(what) {}
};

struct IllegalBoard : DataError {
    using DataError::DataError;
};

struct IllegalPosition : DataError {
    using DataError::DataError;
};

struct IllegalMove : DataError {
    using DataError::DataError;
};

struct CellNotOpen : DataError {
    using DataError::DataError;
};

struct EncodingError : DataError {
    using DataError::DataError;
};

struct NonBinaryCell : DataError {
    using DataError::DataError;
};

struct AntOutOfBounds : DataError {
    long step;
    explicit AntOutOfBounds(long s)
        : DataError("ant left the grid at step " + std::to_string(s)), step(s) {}
};

struct BadFrameCount : DataError {
    using DataError::DataError;
};

struct EmptyVideo : DataError {
    using DataError::DataError;
};

struct DuplicateInstanceId : DataError {
    using DataError::DataError;
};

struct DuplicatePoint : DataError {
    using DataError::DataError;
};

}  // namespace gridbench
