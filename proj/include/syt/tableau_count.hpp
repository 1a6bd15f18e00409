#pragma once

#include "syt/count.hpp"
#include "syt/shapes.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace syt {

// n! / prod(hooks) left a remainder. Never a property of valid input.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Brute-force enumeration refused a shape above the safety cap.
class OracleCapExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int default_oracle_cap = 16;

// A filling of a shape with 1..n. entries[c][r] is the symbol in column c
// (0-based), row r (0-based, top to bottom).
struct StandardTableau {
    ColumnShape shape;
    std::vector<std::vector<int>> entries;

    // Symbols increase down every column and along every row, and each of
    // 1..n appears once.
    bool is_standard() const;

    bool operator==(const StandardTableau &) const = default;
};

// Hook Length Formula on the row-form diagram: n! / prod(arm + leg + 1).
Count syt_count_hlf(const ColumnShape &shape);

namespace detail {
// syt_count_hlf on a raw column list already known to be a valid shape.
Count hlf_columns(std::span<const int> columns);
} // namespace detail

// Every standard filling of `shape`, built by placing 1, 2, ..., n in turn
// into an addable cell, trying columns left to right. Throws
// OracleCapExceeded when shape.cells() > cap.
std::vector<StandardTableau> syt_enumerate(const ColumnShape &shape,
                                           int cap = default_oracle_cap);

// Corner-removal recursion f(shape) = sum f(shape - corner), f(empty) = 1,
// memoized on the column list. One instance per thread; not synchronized.
class RecursiveCounter {
public:
    Count count(const ColumnShape &shape);
    std::size_t memo_size() const { return memo_.size(); }

private:
    Count count_columns(std::vector<int> &columns);
    std::map<std::vector<int>, Count> memo_;
};

// Uses a thread-local RecursiveCounter.
Count syt_count_recursive(const ColumnShape &shape);

} // namespace syt
