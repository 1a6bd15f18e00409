#include "syt/shapes.hpp"

#include "doctest.h"

#include <map>
#include <set>

using namespace syt;

namespace {

// Independent oracle: every weakly decreasing positive list summing to n,
// by brute-force recursion over all compositions.
void all_compositions(int n, std::vector<int> &prefix, std::vector<std::vector<int>> &out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int p = 1; p <= n; ++p) {
        prefix.push_back(p);
        all_compositions(n - p, prefix, out);
        prefix.pop_back();
    }
}

std::set<std::vector<int>> partitions_by_filter(int n, int max_width)
{
    std::vector<std::vector<int>> comps;
    std::vector<int> prefix;
    all_compositions(n, prefix, comps);
    std::set<std::vector<int>> out;
    for (const auto &c : comps)
        if (static_cast<int>(c.size()) <= max_width && std::is_sorted(c.rbegin(), c.rend()))
            out.insert(c);
    return out;
}

std::vector<std::vector<int>> as_lists(const std::vector<ColumnShape> &shapes)
{
    std::vector<std::vector<int>> out;
    for (const auto &s : shapes)
        out.emplace_back(s.columns().begin(), s.columns().end());
    return out;
}

} // namespace

TEST_CASE("ColumnShape validates and derives cells and width")
{
    ColumnShape s{4, 2, 1};
    CHECK(s.cells() == 7);
    CHECK(s.width() == 3);
    CHECK(s.column(1) == 4);
    CHECK(s.column(4) == 0);
    CHECK(s.column(0) == 0);
    CHECK(s.second_third_diff() == 1);
    CHECK(ColumnShape{}.cells() == 0);
    CHECK(ColumnShape{}.empty());
    CHECK_THROWS_AS(ColumnShape({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnShape({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnShape({-1}), std::invalid_argument);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(ColumnShape{2, 1}) == ColumnShape{2, 1});
    CHECK(conjugate(ColumnShape{3, 3}) == ColumnShape{2, 2, 2});
    CHECK(conjugate(ColumnShape{}) == ColumnShape{});
    CHECK(conjugate(ColumnShape{4}) == ColumnShape{1, 1, 1, 1});

    for (int n = 0; n <= 12; ++n)
        for (const auto &s : shapes_with_bounded_width(n, n)) {
            const auto c = conjugate(s);
            CHECK(c.cells() == s.cells());
            CHECK(conjugate(c) == s);
            CHECK(c.width() == s.column(1));
        }
}

TEST_CASE("shape text format")
{
    CHECK(format_shape(ColumnShape{4, 2, 1}) == "4,2,1");
    CHECK(format_shape(ColumnShape{}) == "");
    CHECK(parse_shape("4,2,1") == ColumnShape{4, 2, 1});
    CHECK(parse_shape("") == ColumnShape{});
    CHECK_THROWS_AS(parse_shape("4,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("4,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("3,"), std::invalid_argument);
    for (const auto &s : shapes_with_bounded_width(9, 4))
        CHECK(parse_shape(format_shape(s)) == s);
}

TEST_CASE("bounded-width partitions match a brute-force filter")
{
    for (int n = 0; n <= 14; ++n)
        for (int w = 1; w <= 6; ++w) {
            const auto lists = as_lists(shapes_with_bounded_width(n, w));
            const std::set<std::vector<int>> got(lists.begin(), lists.end());
            CHECK(got.size() == lists.size());
            CHECK(got == partitions_by_filter(n, w));
            // lexicographically decreasing
            CHECK(std::is_sorted(lists.rbegin(), lists.rend()));
        }
}

TEST_CASE("enumerate_family examples")
{
    CHECK(as_lists(enumerate_family({.cells = 4, .max_width = 3, .second_third_diff = 0})) ==
          std::vector<std::vector<int>>{{4}, {2, 1, 1}});
    CHECK(as_lists(enumerate_family({.cells = 6, .max_width = 3, .second_third_diff = 2})) ==
          std::vector<std::vector<int>>{{4, 2}});
    CHECK(as_lists(enumerate_family(
              {.cells = 3, .max_width = 4, .second_third_diff = 0, .equal_pair = 3})) ==
          std::vector<std::vector<int>>{{3}});
    CHECK(enumerate_family({.cells = 0, .max_width = 3, .second_third_diff = 0}).size() == 1);
    CHECK(enumerate_family({.cells = 0, .max_width = 3, .second_third_diff = 1}).empty());
    CHECK_THROWS_AS(enumerate_family({.cells = -1, .max_width = 3}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family({.cells = 3, .max_width = 0}), std::invalid_argument);
}

TEST_CASE("families indexed by c2 - c3 partition all bounded shapes")
{
    for (int n = 0; n <= 25; ++n)
        for (int s = 1; s <= 6; ++s) {
            std::map<std::vector<int>, int> seen;
            for (int i = 0; i <= n; ++i)
                for (const auto &l : as_lists(enumerate_family(
                         {.cells = n, .max_width = s, .second_third_diff = i})))
                    ++seen[l];
            const auto all = as_lists(shapes_with_bounded_width(n, s));
            REQUIRE(seen.size() == all.size());
            for (const auto &l : all)
                CHECK(seen[l] == 1);
        }
}

TEST_CASE("equal_pair constraint holds literally with zero padding")
{
    for (int n = 0; n <= 14; ++n)
        for (int j = 1; j <= 5; ++j)
            for (int i = 0; i <= n / 2; ++i)
                for (const auto &s : enumerate_family(
                         {.cells = n, .max_width = 6, .second_third_diff = i, .equal_pair = j})) {
                    CHECK(s.column(j) == s.column(j + 1));
                    CHECK(s.second_third_diff() == i);
                    CHECK(s.width() <= 6);
                }
}

TEST_CASE("r3_shape")
{
    CHECK(r3_shape(4, 1) == ColumnShape{1, 1, 1});
    CHECK(r3_shape(6, 2) == ColumnShape{2, 2, 1});
    CHECK_FALSE(r3_shape(5, 0).has_value());
    for (int i = 0; i <= 2; ++i)
        CHECK_FALSE(r3_shape(5, i).has_value());
    CHECK_FALSE(r3_shape(4, 3).has_value());

    for (int n = 1; n <= 30; ++n)
        for (int i = 1; i <= n / 2; ++i) {
            const auto family = enumerate_family(
                {.cells = n - 1, .max_width = 3, .second_third_diff = i - 1, .equal_pair = 1});
            const auto shape = r3_shape(n, i);
            if (!shape) {
                CHECK(family.empty());
                continue;
            }
            REQUIRE(family.size() == 1);
            CHECK(family.front() == *shape);
            CHECK(shape->cells() == n - 1);
            CHECK(shape->column(1) == shape->column(2));
            CHECK(shape->second_third_diff() == i - 1);
        }
}
