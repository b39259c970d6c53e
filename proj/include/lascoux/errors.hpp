#pragma once

#include <stdexcept>
#include <string>

namespace lascoux {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A filling fails the set-valued tableau conditions (or a shape is not a
/// partition).  Carries the offending cell when one exists; for a row or
/// column violation the reported cell is the right/lower cell of the bad
/// adjacent pair.
class validation_error : public error {
public:
    enum class kind {
        empty_cell,        // a cell holds no values
        bad_entry,         // an entry is < 1
        ragged_shape,      // rows don't match the declared partition shape
        row_violation,     // max(left cell) > min(right cell)
        column_violation,  // max(upper cell) >= min(lower cell)
        not_a_key,         // singleton tableau whose columns are not nested
    };

    validation_error(kind k, int row, int col, const std::string& what)
        : error(what), kind_(k), row_(row), col_(col) {}

    kind which() const { return kind_; }
    int row() const { return row_; }
    int col() const { return col_; }

private:
    kind kind_;
    int row_;
    int col_;
};

/// Two tableaux compared entrywise do not have the same shape.
class shape_mismatch : public error {
public:
    using error::error;
};

/// An operator index i is outside 1 <= i < n.
class index_out_of_range : public error {
public:
    using error::error;
};

/// A polynomial was requested in fewer variables than the composition needs.
class too_few_variables : public error {
public:
    using error::error;
};

/// A tableau mentions a value larger than the number of variables.
class entry_exceeds_variables : public error {
public:
    using error::error;
};

/// A shape has more rows than the alphabet allows (no column-strict filling).
class infeasible_shape : public error {
public:
    using error::error;
};

/// An enumeration or graph would exceed its configured size bound.
class size_guard_exceeded : public error {
public:
    using error::error;
};

/// The expansion-based right-key oracle would expand too many tableaux.
class oracle_guard : public error {
public:
    using error::error;
};

/// Malformed textual input (compositions, JSON, i-words).
class parse_error : public error {
public:
    using error::error;
};

/// Two routes that must agree disagreed (dual-route computations, verify).
class mismatch_error : public error {
public:
    using error::error;
};

}  // namespace lascoux
