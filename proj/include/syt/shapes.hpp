#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syt {

// A Young diagram stored as column lengths, leftmost column first.
// Columns are weakly decreasing and strictly positive; the empty list is
// the unique shape with zero cells.
class ColumnShape {
public:
    ColumnShape() = default;

    // Throws std::invalid_argument unless `columns` is weakly decreasing
    // with positive entries.
    explicit ColumnShape(std::vector<int> columns);
    ColumnShape(std::initializer_list<int> columns);

    std::span<const int> columns() const { return columns_; }
    int width() const { return static_cast<int>(columns_.size()); }
    int cells() const { return cells_; }
    bool empty() const { return columns_.empty(); }

    // Length of the j-th column (1-based). Columns past the width are 0,
    // so constraints like c3 == c4 make sense on narrow shapes.
    int column(int j) const;

    // c2 - c3 under the zero-padding convention.
    int second_third_diff() const { return column(2) - column(3); }

    // Row lengths (the conjugate partition read as rows).
    std::vector<int> rows() const;

    auto operator<=>(const ColumnShape &) const = default;
    bool operator==(const ColumnShape &) const = default;

private:
    std::vector<int> columns_;
    int cells_ = 0;
};

ColumnShape conjugate(const ColumnShape &shape);

// "4,2,1"; the empty shape is the empty string.
std::string format_shape(const ColumnShape &shape);
// Inverse of format_shape. Throws std::invalid_argument on malformed text
// or a list that is not a valid shape.
ColumnShape parse_shape(std::string_view text);

struct ShapeFamilyQuery {
    int cells = 0;
    int max_width = 1;
    std::optional<int> second_third_diff; // c2 - c3 == i
    std::optional<int> equal_pair;        // c_j == c_{j+1}

    bool accepts(const ColumnShape &shape) const;
};

// Every shape matching `q`, each once, in lexicographically decreasing
// order of the column lists. Throws std::invalid_argument for a negative
// cell count or max_width < 1.
std::vector<ColumnShape> enumerate_family(const ShapeFamilyQuery &q);

// All partitions of `cells` into at most `max_width` columns, same order.
std::vector<ColumnShape> shapes_with_bounded_width(int cells, int max_width);

// Calls visit(columns) for each partition of `cells` into at most
// `max_width` parts, lexicographically decreasing. The span is only valid
// for the duration of the call. No validation or allocation per shape.
template <class Visitor>
void for_each_bounded_partition(int cells, int max_width, Visitor &&visit);

// The single shape ((n+i-2)/3, (n+i-2)/3, (n-2i+1)/3) whose tableaux are
// missed by the cell-removal map in the three-column recurrence. Present
// only when n - 2i = 2 (mod 3) and the list is a valid shape.
std::optional<ColumnShape> r3_shape(int n, int i);

namespace detail {

template <class Visitor>
void bounded_partitions(std::vector<int> &buf, int remaining, int max_part,
                        int slots, Visitor &visit)
{
    if (remaining == 0) {
        visit(std::span<const int>(buf));
        return;
    }
    if (slots == 0)
        return;
    // The remaining parts must fit in `slots` columns of height <= p.
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        if (static_cast<long>(p) * slots < remaining)
            break;
        buf.push_back(p);
        bounded_partitions(buf, remaining - p, p, slots - 1, visit);
        buf.pop_back();
    }
}

} // namespace detail

template <class Visitor>
void for_each_bounded_partition(int cells, int max_width, Visitor &&visit)
{
    if (cells < 0 || max_width < 0)
        return;
    std::vector<int> buf;
    buf.reserve(static_cast<std::size_t>(max_width));
    detail::bounded_partitions(buf, cells, cells, max_width, visit);
}

} // namespace syt
