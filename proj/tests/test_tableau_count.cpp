#include "syt/tableau_count.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <thread>

using namespace syt;

namespace {

// Oracle independent of every library path: try all n! permutations and
// keep the standard ones.
std::size_t count_by_permutations(const ColumnShape &shape)
{
    std::vector<int> symbols(static_cast<std::size_t>(shape.cells()));
    std::iota(symbols.begin(), symbols.end(), 1);
    std::size_t count = 0;
    do {
        StandardTableau t{shape, {}};
        std::size_t k = 0;
        for (int c : shape.columns()) {
            t.entries.emplace_back(symbols.begin() + static_cast<long>(k),
                                   symbols.begin() + static_cast<long>(k + static_cast<std::size_t>(c)));
            k += static_cast<std::size_t>(c);
        }
        count += t.is_standard() ? 1 : 0;
    } while (std::next_permutation(symbols.begin(), symbols.end()));
    return count;
}

Count factorial(int n)
{
    Count f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

} // namespace

TEST_CASE("hook length formula examples")
{
    CHECK(syt_count_hlf(ColumnShape{2, 1}) == 2);
    CHECK(syt_count_hlf(ColumnShape{3, 3}) == 5);
    CHECK(syt_count_hlf(ColumnShape{}) == 1);
    for (int n = 1; n <= 30; ++n)
        CHECK(syt_count_hlf(ColumnShape{n}) == 1);
    CHECK(syt_count_hlf(ColumnShape{3, 1, 1}) == 6);
    CHECK(syt_count_hlf(ColumnShape{2, 2, 1}) == 5);
    CHECK(syt_count_hlf(ColumnShape{5, 3}) == 28);
    // Exceeds 64 bits: staircase with 10 columns, 55 cells.
    CHECK(syt_count_hlf(ColumnShape{10, 9, 8, 7, 6, 5, 4, 3, 2, 1}).get_str() ==
          "44261486084874072183645699204710400");
}

TEST_CASE("enumeration examples and cap")
{
    CHECK(syt_enumerate(ColumnShape{2, 1}).size() == 2);
    CHECK(syt_enumerate(ColumnShape{1, 1, 1}).size() == 1);
    const auto empty = syt_enumerate(ColumnShape{});
    REQUIRE(empty.size() == 1);
    CHECK(empty.front().entries.empty());

    const auto two = syt_enumerate(ColumnShape{2, 1});
    CHECK(two[0].entries == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(two[1].entries == std::vector<std::vector<int>>{{1, 3}, {2}});

    CHECK_THROWS_AS(syt_enumerate(ColumnShape{9, 8}), OracleCapExceeded);
    CHECK(syt_enumerate(ColumnShape{9, 8}, 17).size() == syt_count_hlf(ColumnShape{9, 8}));
}

TEST_CASE("recursive oracle examples")
{
    CHECK(syt_count_recursive(ColumnShape{2, 2}) == 2);
    CHECK(syt_count_recursive(ColumnShape{1}) == 1);
    CHECK(syt_count_recursive(ColumnShape{2, 1, 1}) == 3);
    CHECK(syt_count_recursive(ColumnShape{}) == 1);
}

TEST_CASE("permutation brute force agrees on small shapes")
{
    for (int n = 0; n <= 7; ++n)
        for (const auto &shape : shapes_with_bounded_width(n, n))
            CHECK(count_by_permutations(shape) == syt_count_hlf(shape));
}

TEST_CASE("triple agreement up to 12 cells")
{
    RecursiveCounter counter;
    for (int n = 0; n <= 12; ++n)
        for (const auto &shape : shapes_with_bounded_width(n, n)) {
            const auto tableaux = syt_enumerate(shape);
            const Count hlf = syt_count_hlf(shape);
            CHECK(hlf == counter.count(shape));
            CHECK(hlf == tableaux.size());
            std::set<std::vector<std::vector<int>>> distinct;
            for (const auto &t : tableaux) {
                CHECK(t.is_standard());
                distinct.insert(t.entries);
            }
            CHECK(distinct.size() == tableaux.size());
        }
}

TEST_CASE("conjugation invariance up to 20 cells")
{
    for (int n = 0; n <= 20; ++n)
        for (const auto &shape : shapes_with_bounded_width(n, n))
            CHECK(syt_count_hlf(shape) == syt_count_hlf(conjugate(shape)));
}

TEST_CASE("sum of squares and sum of f")
{
    CHECK(syt_count_hlf(ColumnShape{4}) + syt_count_hlf(ColumnShape{3, 1}) +
              syt_count_hlf(ColumnShape{2, 2}) + syt_count_hlf(ColumnShape{2, 1, 1}) +
              syt_count_hlf(ColumnShape{1, 1, 1, 1}) ==
          10);
    Count involutions_prev = 1, involutions = 1;
    for (int n = 0; n <= 10; ++n) {
        if (n >= 2) {
            Count next = involutions + (n - 1) * involutions_prev;
            involutions_prev = involutions;
            involutions = next;
        }
        Count sum = 0, sum_sq = 0;
        for (const auto &shape : shapes_with_bounded_width(n, n)) {
            const Count f = syt_count_hlf(shape);
            sum += f;
            sum_sq += f * f;
        }
        CHECK(sum_sq == factorial(n));
        CHECK(sum == involutions);
    }
}

TEST_CASE("is_standard rejects bad fillings")
{
    const ColumnShape shape{2, 1};
    CHECK_FALSE(StandardTableau{shape, {{2, 1}, {3}}}.is_standard());
    CHECK_FALSE(StandardTableau{shape, {{1, 3}, {1}}}.is_standard());
    CHECK_FALSE(StandardTableau{shape, {{2, 3}, {1}}}.is_standard());
    CHECK_FALSE(StandardTableau{shape, {{1, 2}}}.is_standard());
    CHECK(StandardTableau{shape, {{1, 2}, {3}}}.is_standard());
}

TEST_CASE("recursive oracle gives identical results across threads")
{
    const auto shapes = shapes_with_bounded_width(14, 4);
    std::vector<std::vector<Count>> results(4);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < results.size(); ++t)
            pool.emplace_back([&, t] {
                for (const auto &s : shapes)
                    results[t].push_back(syt_count_recursive(s));
            });
    }
    for (const auto &r : results)
        CHECK(r == results.front());
}

TEST_CASE("random shapes: hooks, recursion and conjugation agree")
{
    std::mt19937 rng(20241015);
    RecursiveCounter counter;
    for (int trial = 0; trial < 200; ++trial) {
        const int width = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<int> columns;
        int height = std::uniform_int_distribution<int>(1, 9)(rng);
        for (int k = 0; k < width; ++k) {
            columns.push_back(height);
            height = std::uniform_int_distribution<int>(1, height)(rng);
        }
        const ColumnShape shape(columns);
        INFO(format_shape(shape));
        const Count f = syt_count_hlf(shape);
        CHECK(f == counter.count(shape));
        CHECK(f == syt_count_hlf(conjugate(shape)));
    }
}
