#include "syt/tableau_count.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace syt {

namespace detail {

Count hlf_columns(std::span<const int> columns)
{
    if (columns.empty())
        return 1;
    std::vector<int> rows(static_cast<std::size_t>(columns.front()), 0);
    unsigned long cells = 0;
    for (int c : columns) {
        cells += static_cast<unsigned long>(c);
        for (int r = 0; r < c; ++r)
            ++rows[static_cast<std::size_t>(r)];
    }

    // Hooks are at most n; batch them into a machine word before each
    // bignum multiply.
    Count hooks = 1;
    std::uint64_t batch = 1;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (int r = 0; r < columns[c]; ++r) {
            const auto leg = static_cast<std::uint64_t>(columns[c] - r - 1);
            const auto arm = static_cast<std::uint64_t>(rows[static_cast<std::size_t>(r)]) - c - 1;
            const std::uint64_t hook = arm + leg + 1;
            if (batch > std::numeric_limits<std::uint64_t>::max() / hook) {
                mpz_mul_ui(hooks.get_mpz_t(), hooks.get_mpz_t(), batch);
                batch = 1;
            }
            batch *= hook;
        }
    }
    mpz_mul_ui(hooks.get_mpz_t(), hooks.get_mpz_t(), batch);

    Count factorial;
    mpz_fac_ui(factorial.get_mpz_t(), cells);
    Count quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), factorial.get_mpz_t(),
                hooks.get_mpz_t());
    if (remainder != 0)
        throw InternalConsistencyError("hook product does not divide n! for a shape with " +
                                       std::to_string(cells) + " cells");
    return quotient;
}

} // namespace detail

Count syt_count_hlf(const ColumnShape &shape) { return detail::hlf_columns(shape.columns()); }

bool StandardTableau::is_standard() const
{
    if (entries.size() != static_cast<std::size_t>(shape.width()))
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(shape.cells()) + 1, false);
    for (std::size_t c = 0; c < entries.size(); ++c) {
        if (entries[c].size() != static_cast<std::size_t>(shape.column(static_cast<int>(c) + 1)))
            return false;
        for (std::size_t r = 0; r < entries[c].size(); ++r) {
            const int v = entries[c][r];
            if (v < 1 || v > shape.cells() || seen[static_cast<std::size_t>(v)])
                return false;
            seen[static_cast<std::size_t>(v)] = true;
            if (r > 0 && entries[c][r - 1] >= v)
                return false;
            if (c > 0 && entries[c - 1][r] >= v)
                return false;
        }
    }
    return true;
}

namespace {

void grow(const ColumnShape &shape, int next, StandardTableau &current,
          std::vector<StandardTableau> &out)
{
    if (next > shape.cells()) {
        out.push_back(current);
        return;
    }
    auto &entries = current.entries;
    for (std::size_t c = 0; c < entries.size(); ++c) {
        const auto filled = entries[c].size();
        if (filled >= static_cast<std::size_t>(shape.column(static_cast<int>(c) + 1)))
            continue;
        if (c > 0 && filled >= entries[c - 1].size())
            continue;
        entries[c].push_back(next);
        grow(shape, next + 1, current, out);
        entries[c].pop_back();
    }
}

} // namespace

std::vector<StandardTableau> syt_enumerate(const ColumnShape &shape, int cap)
{
    if (shape.cells() > cap)
        throw OracleCapExceeded("shape " + format_shape(shape) + " has " +
                                std::to_string(shape.cells()) +
                                " cells, above the enumeration cap of " + std::to_string(cap));
    StandardTableau current{shape, std::vector<std::vector<int>>(
                                       static_cast<std::size_t>(shape.width()))};
    std::vector<StandardTableau> out;
    grow(shape, 1, current, out);
    return out;
}

Count RecursiveCounter::count(const ColumnShape &shape)
{
    std::vector<int> columns(shape.columns().begin(), shape.columns().end());
    return count_columns(columns);
}

Count RecursiveCounter::count_columns(std::vector<int> &columns)
{
    if (columns.empty())
        return 1;
    if (auto it = memo_.find(columns); it != memo_.end())
        return it->second;

    Count total = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        // The bottom cell of column c is a corner iff the next column is shorter.
        if (c + 1 < columns.size() && columns[c + 1] == columns[c])
            continue;
        std::vector<int> smaller = columns;
        if (--smaller[c] == 0)
            smaller.pop_back();
        total += count_columns(smaller);
    }
    memo_.emplace(columns, total);
    return total;
}

Count syt_count_recursive(const ColumnShape &shape)
{
    thread_local RecursiveCounter counter;
    return counter.count(shape);
}

} // namespace syt
