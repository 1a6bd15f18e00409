#include "syt/shapes.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace syt {

namespace {

void validate_columns(const std::vector<int> &columns)
{
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] <= 0)
            throw std::invalid_argument("column lengths must be positive");
        if (k > 0 && columns[k] > columns[k - 1])
            throw std::invalid_argument("column lengths must be weakly decreasing");
    }
}

} // namespace

ColumnShape::ColumnShape(std::vector<int> columns) : columns_(std::move(columns))
{
    validate_columns(columns_);
    cells_ = std::accumulate(columns_.begin(), columns_.end(), 0);
}

ColumnShape::ColumnShape(std::initializer_list<int> columns)
    : ColumnShape(std::vector<int>(columns))
{
}

int ColumnShape::column(int j) const
{
    if (j < 1 || j > width())
        return 0;
    return columns_[static_cast<std::size_t>(j - 1)];
}

std::vector<int> ColumnShape::rows() const
{
    if (columns_.empty())
        return {};
    std::vector<int> rows(static_cast<std::size_t>(columns_.front()), 0);
    for (int c : columns_)
        for (int r = 0; r < c; ++r)
            ++rows[static_cast<std::size_t>(r)];
    return rows;
}

ColumnShape conjugate(const ColumnShape &shape) { return ColumnShape(shape.rows()); }

std::string format_shape(const ColumnShape &shape)
{
    std::string out;
    for (int c : shape.columns()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(c);
    }
    return out;
}

ColumnShape parse_shape(std::string_view text)
{
    std::vector<int> columns;
    if (text.empty())
        return ColumnShape{};
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw std::invalid_argument("malformed shape \"" + std::string(text) +
                                        "\": expected comma-separated column lengths");
        columns.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return ColumnShape(std::move(columns));
}

bool ShapeFamilyQuery::accepts(const ColumnShape &shape) const
{
    if (shape.cells() != cells || shape.width() > max_width)
        return false;
    if (second_third_diff && shape.second_third_diff() != *second_third_diff)
        return false;
    if (equal_pair && shape.column(*equal_pair) != shape.column(*equal_pair + 1))
        return false;
    return true;
}

std::vector<ColumnShape> shapes_with_bounded_width(int cells, int max_width)
{
    if (cells < 0 || max_width < 0)
        throw std::invalid_argument("cells and max_width must be non-negative");
    std::vector<ColumnShape> out;
    for_each_bounded_partition(cells, max_width, [&](std::span<const int> cols) {
        out.emplace_back(std::vector<int>(cols.begin(), cols.end()));
    });
    return out;
}

std::vector<ColumnShape> enumerate_family(const ShapeFamilyQuery &q)
{
    if (q.cells < 0)
        throw std::invalid_argument("cells must be non-negative");
    if (q.max_width < 1)
        throw std::invalid_argument("max_width must be at least 1");
    if (q.equal_pair && *q.equal_pair < 1)
        throw std::invalid_argument("equal_pair must be at least 1");
    std::vector<ColumnShape> out;
    for (auto &shape : shapes_with_bounded_width(q.cells, q.max_width))
        if (q.accepts(shape))
            out.push_back(std::move(shape));
    return out;
}

std::optional<ColumnShape> r3_shape(int n, int i)
{
    if (n < 1 || i < 0 || i > n / 2)
        return std::nullopt;
    if (((n - 2 * i) % 3 + 3) % 3 != 2)
        return std::nullopt;
    int equal = (n + i - 2) / 3;
    int third = (n - 2 * i + 1) / 3;
    if (equal <= 0 || third <= 0 || third > equal)
        return std::nullopt;
    return ColumnShape{equal, equal, third};
}

} // namespace syt
